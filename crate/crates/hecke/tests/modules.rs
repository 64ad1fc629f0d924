use mseg_hecke::algebra::{HeckeAlgebra, HeckeElement};
use mseg_hecke::bridge::linkage_bridge;
use mseg_hecke::central::central_character;
use mseg_hecke::induce::{induce, point_module, standard_module};
use mseg_hecke::meataxe::{are_isomorphic, meataxe};
use mseg_hecke::module::{char_l, char_z, HeckeModule};
use mseg_hecke::perm::Perm;
use mseg_hecke::relations::check_relations;
use mseg_hecke::PrimeField;
use proptest::prelude::*;

fn element(h: &HeckeAlgebra, terms: &[(Vec<i64>, usize, u64)]) -> HeckeElement {
    let perms = Perm::all(h.rank());
    let mut out = HeckeElement::zero(h.rank());
    for (lambda, w, c) in terms {
        let m = h.monomial(lambda.clone(), perms[w % perms.len()].clone(), *c).unwrap();
        out = h.add(&out, &m).unwrap();
    }
    out
}

fn arb_terms(n: usize) -> impl Strategy<Value = Vec<(Vec<i64>, usize, u64)>> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, n), 0usize..24, 1u64..13), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn standard_module_is_a_representation(
        a in arb_terms(3),
        b in arb_terms(3),
        xi in prop::sample::select(vec![1u64, 3, 5, 12]),
    ) {
        let f = PrimeField::new(13).unwrap();
        let h = HeckeAlgebra::new(3, f, xi).unwrap();
        let m = standard_module(f, xi, 0, 2).unwrap();
        let (x, y) = (element(&h, &a), element(&h, &b));
        let product = h.multiply(&x, &y).unwrap();
        prop_assert_eq!(m.act(&product).unwrap(), m.act(&x).unwrap().mul(&m.act(&y).unwrap()));
    }

    #[test]
    fn multiplication_is_associative(
        a in arb_terms(3),
        b in arb_terms(3),
        c in arb_terms(3),
    ) {
        let h = HeckeAlgebra::new(3, PrimeField::new(7).unwrap(), 2).unwrap();
        let (x, y, z) = (element(&h, &a), element(&h, &b), element(&h, &c));
        let left = h.multiply(&h.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = h.multiply(&x, &h.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn relations_hold_on_both_fields() {
    for p in [7, 13] {
        let f = PrimeField::new(p).unwrap();
        for order in 1..=4 {
            for xi in f.elements_of_order(order) {
                for n in 2..=4 {
                    let r = check_relations(n, f, xi, 20, xi).unwrap();
                    assert!(r.all_passed(), "p={p} xi={xi} n={n}");
                }
            }
        }
    }
}

/// Simple modules of small rank with central character in `z ξ^ℤ`.
fn simple_factors(f: PrimeField, xi: u64, z: u64, rank: usize) -> Vec<HeckeModule> {
    let mut out = Vec::new();
    if rank == 1 {
        for k in 0..f.order(xi).unwrap() {
            out.push(point_module(f, xi, f.mul(z, f.pow(xi, k))).unwrap());
        }
    } else {
        for a in 0..f.order(xi).unwrap() as i64 {
            let b = a + rank as i64 - 1;
            out.push(char_z(f, xi, a, b, z).unwrap().to_module(f, xi).unwrap());
            if !mseg_hecke::module::z_equals_l(f, xi, rank) {
                out.push(char_l(f, xi, a, b, z).unwrap().to_module(f, xi).unwrap());
            }
        }
    }
    out
}

#[test]
fn induction_from_separated_factors_is_injective() {
    // F_13 with ξ of order 3 has four cosets of ξ^ℤ: 1, 2, 4, 7
    let f = PrimeField::new(13).unwrap();
    let xi = 3;
    for (alpha, cosets) in [(vec![1, 1], vec![1, 2]), (vec![2, 1], vec![1, 2]), (vec![1, 1, 1], vec![1, 2, 4])] {
        let choices: Vec<Vec<HeckeModule>> = alpha
            .iter()
            .zip(&cosets)
            .map(|(&r, &z)| simple_factors(f, xi, z, r))
            .collect();
        let mut tuples: Vec<Vec<HeckeModule>> = vec![vec![]];
        for options in &choices {
            tuples = tuples
                .into_iter()
                .flat_map(|t| options.iter().map(move |m| [t.clone(), vec![m.clone()]].concat()))
                .collect();
        }
        let mut induced = Vec::new();
        for t in &tuples {
            let m = induce(&alpha, t).unwrap();
            assert!(meataxe(&m, 7).irreducible);
            let mut expected: Vec<u64> = t.iter().flat_map(|x| central_character(x).unwrap()).collect();
            expected.sort();
            assert_eq!(central_character(&m).unwrap(), expected);
            induced.push(m);
        }
        for (i, a) in induced.iter().enumerate() {
            for b in &induced[i + 1..] {
                assert!(!are_isomorphic(a, b).unwrap());
            }
        }
    }
}

#[test]
fn bridge_agrees_on_small_segments() {
    for p in [7, 11, 31] {
        let f = PrimeField::new(p).unwrap();
        for order in 1..=5 {
            for xi in f.elements_of_order(order).into_iter().take(1) {
                for len1 in 1..=4i64 {
                    for len2 in 1..=5 - len1 {
                        for a1 in 0..order as i64 {
                            for a2 in 0..order as i64 {
                                let r = linkage_bridge(f, xi, (a1, a1 + len1 - 1), (a2, a2 + len2 - 1), 11).unwrap();
                                assert!(r.consistent(), "p={p} {r:?}");
                            }
                        }
                    }
                }
            }
        }
    }
}
