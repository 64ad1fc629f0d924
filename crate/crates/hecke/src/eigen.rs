use serde::Serialize;

use crate::matrix::Matrix;
use crate::module::{Character, HeckeModule};

/// One-dimensional submodules and quotients, as characters with the
/// dimension of the corresponding joint eigenspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneDimReport {
    pub submodules: Vec<(Character, usize)>,
    pub quotients: Vec<(Character, usize)>,
}

impl OneDimReport {
    pub fn submodule_count(&self) -> usize {
        self.submodules.iter().map(|(_, k)| k).sum()
    }

    pub fn quotient_count(&self) -> usize {
        self.quotients.iter().map(|(_, k)| k).sum()
    }
}

/// Lines stable under the action are joint eigenvectors of the generators;
/// one-dimensional quotients are joint eigenvectors of the transposes.
pub fn one_dim_sub_quot(m: &HeckeModule) -> OneDimReport {
    OneDimReport {
        submodules: joint_eigenspaces(m),
        quotients: joint_eigenspaces(&m.transpose()),
    }
}

/// Every character `χ` with a nonzero joint eigenspace, sorted, with the
/// eigenspace dimension.
pub fn joint_eigenspaces(m: &HeckeModule) -> Vec<(Character, usize)> {
    let f = m.field();
    let n = m.rank();
    let mut s_values = vec![m.xi(), f.neg(1)];
    s_values.dedup();
    let mut gens: Vec<(&Matrix, Vec<u64>)> = (1..n).map(|i| (m.s(i), s_values.clone())).collect();
    gens.extend((1..=n).map(|j| (m.x(j), f.nonzero().collect())));
    let start: Vec<Vec<u64>> = (0..m.dim())
        .map(|k| (0..m.dim()).map(|r| u64::from(r == k)).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    descend(m, &gens, 0, start, &mut chosen, &mut out);
    out.sort();
    out
}

fn descend(
    m: &HeckeModule,
    gens: &[(&Matrix, Vec<u64>)],
    depth: usize,
    basis: Vec<Vec<u64>>,
    chosen: &mut Vec<u64>,
    out: &mut Vec<(Character, usize)>,
) {
    if basis.is_empty() {
        return;
    }
    let Some((a, candidates)) = gens.get(depth) else {
        let s_len = m.rank() - 1;
        out.push((
            Character {
                s: chosen[..s_len].to_vec(),
                x: chosen[s_len..].to_vec(),
            },
            basis.len(),
        ));
        return;
    };
    let f = m.field();
    let b = Matrix::from_columns(f, m.dim(), &basis);
    let ab = a.mul(&b);
    for &c in candidates {
        let shifted = ab.sub(&b.scale(c));
        let kernel: Vec<Vec<u64>> = shifted.nullspace().iter().map(|y| b.apply(y)).collect();
        chosen.push(c);
        descend(m, gens, depth + 1, kernel, chosen, out);
        chosen.pop();
    }
}
