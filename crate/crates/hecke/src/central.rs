use crate::error::{HeckeError, Result};
use crate::matrix::Matrix;
use crate::module::HeckeModule;
use crate::poly::Poly;

/// The scalars `z_1..z_n` (sorted) with `e_k(X_1..X_n)` acting as
/// `e_k(z_1..z_n)`. Requires the symmetric functions to act by scalars and
/// their polynomial to split over the prime field.
pub fn central_character(m: &HeckeModule) -> Result<Vec<u64>> {
    let f = m.field();
    let n = m.rank();
    // coefficients of prod_j (1 + t X_j)
    let mut elementary = vec![Matrix::identity(f, m.dim())];
    for j in 1..=n {
        elementary.push(Matrix::zeros(f, m.dim(), m.dim()));
        for k in (1..elementary.len()).rev() {
            let term = elementary[k - 1].mul(m.x(j));
            elementary[k] = elementary[k].add(&term);
        }
    }
    let scalars = elementary
        .iter()
        .enumerate()
        .map(|(k, e)| {
            e.as_scalar()
                .ok_or_else(|| HeckeError::NotAbsolutelyIrreducible(format!("e_{k}(X) is not scalar")))
        })
        .collect::<Result<Vec<u64>>>()?;
    // t^n - e_1 t^{n-1} + e_2 t^{n-2} - ...
    let coeffs: Vec<u64> = (0..=n)
        .map(|deg| {
            let k = n - deg;
            if k % 2 == 0 {
                scalars[k]
            } else {
                f.neg(scalars[k])
            }
        })
        .collect();
    let mut poly = Poly::new(f, coeffs);
    let mut roots = Vec::new();
    for z in f.nonzero() {
        while poly.degree().unwrap_or(0) > 0 && poly.eval(z) == 0 {
            poly = poly.divrem(&Poly::new(f, vec![f.neg(z), 1])).0;
            roots.push(z);
        }
    }
    if roots.len() != n {
        return Err(HeckeError::NotAbsolutelyIrreducible(
            "central character does not split over the prime field".into(),
        ));
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::induce::{induce, point_module, standard_module};
    use crate::module::{char_l, char_z};

    #[test]
    fn characters_read_off() {
        let f = PrimeField::new(7).unwrap();
        let z = char_z(f, 2, 0, 2, 1).unwrap().to_module(f, 2).unwrap();
        let l = char_l(f, 2, 0, 2, 1).unwrap().to_module(f, 2).unwrap();
        assert_eq!(central_character(&z).unwrap(), vec![1, 2, 4]);
        assert_eq!(central_character(&l).unwrap(), vec![1, 2, 4]);
    }

    #[test]
    fn induction_adds_central_characters() {
        let f = PrimeField::new(7).unwrap();
        let m = induce(&[1, 1], &[point_module(f, 2, 1).unwrap(), point_module(f, 2, 3).unwrap()]).unwrap();
        assert_eq!(central_character(&m).unwrap(), vec![1, 3]);
        // the standard module is reducible but its center still acts by scalars
        assert_eq!(central_character(&standard_module(f, 2, 0, 1).unwrap()).unwrap(), vec![1, 2]);
    }
}
