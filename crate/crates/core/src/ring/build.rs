use super::poly::build_quotient;
use super::{validate_table, RingSpec, RingTable, MAX_ORDER};
use crate::error::{Error, Result};

/// Irreducible polynomials (Conway polynomials) used to realise `F_{p^k}`
/// as `Z_p[a]/(f)`. Only fields of order at most 64 are needed.
pub(crate) const FIELD_MODULI: &[(usize, u32, &str)] = &[
    (2, 2, "a^2+a+1"),
    (2, 3, "a^3+a+1"),
    (2, 4, "a^4+a+1"),
    (2, 5, "a^5+a^2+1"),
    (2, 6, "a^6+a^4+a^3+a+1"),
    (3, 2, "a^2+2a+2"),
    (3, 3, "a^3+2a+1"),
    (5, 2, "a^2+4a+2"),
    (7, 2, "a^2+6a+3"),
];

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Builds and validates the table of a ring presentation.
pub fn build_ring(spec: &RingSpec) -> Result<RingTable> {
    let table = match spec {
        RingSpec::Zmod { n, .. } => zmod(*n)?,
        RingSpec::Gf { p, k, .. } => galois_field(*p, *k)?,
        RingSpec::Product { factors, .. } => {
            let mut flat = Vec::new();
            flatten(factors, &mut flat);
            if flat.is_empty() {
                return Err(Error::InvalidSpec("product with no factors".into()));
            }
            let tables = flat
                .iter()
                .map(|f| build_ring(f))
                .collect::<Result<Vec<_>>>()?;
            product(&tables)?
        }
        RingSpec::Quotient {
            base,
            variables,
            relations,
            order,
            ..
        } => {
            let q = build_quotient(*base, variables, relations)?;
            let t = RingTable::new_unchecked(spec.display_name(), q.add, q.mul, 0, 1, q.labels)?;
            let report = validate_table(&t);
            if !report.is_empty() {
                return Err(Error::NonConfluentPresentation {
                    name: spec.display_name(),
                    reason: report.to_string(),
                });
            }
            if let Some(expected) = order {
                if *expected != t.order() {
                    return Err(Error::NonConfluentPresentation {
                        name: spec.display_name(),
                        reason: format!("expected {expected} elements, built {}", t.order()),
                    });
                }
            }
            t
        }
    };
    Ok(table.with_name(spec.display_name()))
}

fn flatten<'a>(factors: &'a [RingSpec], out: &mut Vec<&'a RingSpec>) {
    for f in factors {
        match f {
            RingSpec::Product {
                factors,
                name: None,
            } => flatten(factors, out),
            other => out.push(other),
        }
    }
}

fn zmod(n: usize) -> Result<RingTable> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!(
            "Z_{n}: modulus must be at least 2"
        )));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut add = vec![0u8; n * n];
    let mut mul = vec![0u8; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = ((a + b) % n) as u8;
            mul[a * n + b] = (a * b % n) as u8;
        }
    }
    let labels = (0..n).map(|a| a.to_string()).collect();
    RingTable::new(format!("Z_{n}"), add, mul, 0, 1, labels)
}

fn galois_field(p: usize, k: u32) -> Result<RingTable> {
    if !is_prime(p) {
        return Err(Error::InvalidSpec(format!("GF({p}^{k}): {p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidSpec("GF degree must be at least 1".into()));
    }
    let q = p
        .checked_pow(k)
        .filter(|&q| q <= MAX_ORDER)
        .ok_or(Error::OrderTooLarge(usize::MAX))?;
    if k == 1 {
        return zmod(p);
    }
    let modulus = FIELD_MODULI
        .iter()
        .find(|(pp, kk, _)| *pp == p && *kk == k)
        .map(|(_, _, f)| *f)
        .ok_or_else(|| Error::InvalidSpec(format!("no modulus recorded for F_{q}")))?;
    let qt = build_quotient(p, &["a".to_string()], &[modulus.to_string()])?;
    let t = RingTable::new(format!("F_{q}"), qt.add, qt.mul, 0, 1, qt.labels)?;
    if !t.is_field() {
        return Err(Error::InvalidSpec(format!(
            "modulus {modulus} is reducible"
        )));
    }
    Ok(t)
}

/// Direct product; element `(a_1, …, a_r)` has mixed-radix index with the
/// first factor most significant.
pub(crate) fn product(factors: &[RingTable]) -> Result<RingTable> {
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .filter(|&o| o <= MAX_ORDER)
        .ok_or_else(|| Error::OrderTooLarge(factors.iter().map(|f| f.order()).product()))?;
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let split = |mut idx: usize| {
        let mut parts = vec![0usize; factors.len()];
        for (slot, f) in parts.iter_mut().zip(factors).rev() {
            *slot = idx % f.order();
            idx /= f.order();
        }
        parts
    };
    let join = |parts: &[usize]| {
        parts
            .iter()
            .zip(factors)
            .fold(0usize, |acc, (&p, f)| acc * f.order() + p)
    };
    let comps: Vec<Vec<usize>> = (0..order).map(split).collect();
    let mut add = vec![0u8; order * order];
    let mut mul = vec![0u8; order * order];
    for a in 0..order {
        for b in 0..order {
            let s: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    f.add(
                        super::RingElem(comps[a][i] as u8),
                        super::RingElem(comps[b][i] as u8),
                    )
                    .index()
                })
                .collect();
            let m: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    f.mul(
                        super::RingElem(comps[a][i] as u8),
                        super::RingElem(comps[b][i] as u8),
                    )
                    .index()
                })
                .collect();
            add[a * order + b] = join(&s) as u8;
            mul[a * order + b] = join(&m) as u8;
        }
    }
    let zero = join(&factors.iter().map(|f| f.zero().index()).collect::<Vec<_>>());
    let one = join(&factors.iter().map(|f| f.one().index()).collect::<Vec<_>>());
    let labels = comps
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c
                .iter()
                .zip(factors)
                .map(|(&i, f)| f.label(super::RingElem(i as u8)))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let name = factors
        .iter()
        .map(|f| f.name().to_string())
        .collect::<Vec<_>>()
        .join("×");
    RingTable::new(name, add, mul, zero as u8, one as u8, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingElem;

    #[test]
    fn zmod_rejects_small_and_large() {
        assert!(matches!(
            build_ring(&RingSpec::zmod(1)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            build_ring(&RingSpec::zmod(65)),
            Err(Error::OrderTooLarge(65))
        ));
        assert_eq!(build_ring(&RingSpec::zmod(64)).unwrap().order(), 64);
    }

    #[test]
    fn fields_are_fields() {
        for &(p, k, _) in FIELD_MODULI {
            let t = build_ring(&RingSpec::gf(p, k)).unwrap();
            assert_eq!(t.order(), p.pow(k));
            assert!(t.is_field(), "F_{}", p.pow(k));
            assert_eq!(t.units().len(), t.order() - 1);
        }
        assert!(build_ring(&RingSpec::gf(4, 1)).is_err());
        assert!(build_ring(&RingSpec::gf(2, 7)).is_err());
    }

    #[test]
    fn product_is_componentwise() {
        let t = build_ring(&RingSpec::product(vec![
            RingSpec::zmod(2),
            RingSpec::zmod(2),
            RingSpec::zmod(2),
        ]))
        .unwrap();
        assert_eq!(t.order(), 8);
        assert_eq!(t.name(), "Z_2×Z_2×Z_2");
        let a = t.elem_by_label("(1,1,0)").unwrap();
        let b = t.elem_by_label("(0,1,1)").unwrap();
        assert_eq!(t.label(t.mul(a, b)), "(0,1,0)");
        assert_eq!(t.label(t.add(a, b)), "(1,0,1)");
        assert_eq!(t.label(t.one()), "(1,1,1)");
    }

    #[test]
    fn nested_products_flatten() {
        let inner = RingSpec::product(vec![RingSpec::zmod(2), RingSpec::zmod(3)]);
        let t = build_ring(&RingSpec::product(vec![inner, RingSpec::zmod(2)])).unwrap();
        assert_eq!(t.order(), 12);
        assert!(t.elem_by_label("(1,2,1)").is_some());
    }

    #[test]
    fn oversized_product_is_rejected() {
        let spec = RingSpec::product(vec![RingSpec::zmod(9), RingSpec::zmod(8)]);
        assert!(matches!(build_ring(&spec), Err(Error::OrderTooLarge(72))));
    }

    #[test]
    fn z4_mod_2x_x2_brute_force() {
        // Oracle: pairs (a, b) standing for a + b·x with a in Z_4, b in {0,1};
        // 2x = 0 and x^2 = 0 give (a,b)(c,d) = (ac, ad+bc mod 2).
        let t = build_ring(&RingSpec::quotient(4, &["x"], &["2x", "x^2"]).expecting(8)).unwrap();
        assert_eq!(t.order(), 8);
        let elem = |a: u64, b: u64| {
            let label = match (a, b) {
                (0, 0) => "0".to_string(),
                (a, 0) => a.to_string(),
                (0, 1) => "x".to_string(),
                (a, _) => format!("{a}+x"),
            };
            t.elem_by_label(&label).unwrap()
        };
        for a in 0..4 {
            for b in 0..2 {
                for c in 0..4 {
                    for d in 0..2 {
                        let prod = t.mul(elem(a, b), elem(c, d));
                        assert_eq!(prod, elem(a * c % 4, (a * d + b * c) % 2));
                        let sum = t.add(elem(a, b), elem(c, d));
                        assert_eq!(sum, elem((a + c) % 4, (b + d) % 2));
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_expected_order_is_caught() {
        let spec = RingSpec::quotient(4, &["x"], &["2x", "x^2"]).expecting(16);
        assert!(matches!(
            build_ring(&spec),
            Err(Error::NonConfluentPresentation { .. })
        ));
    }

    #[test]
    fn nilpotent_sum_in_z2_xy() {
        let t = build_ring(&RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2"])).unwrap();
        assert_eq!(t.order(), 16);
        let v = t.elem_by_label("x+y").unwrap();
        assert_eq!(t.nilpotency_index(v), Some(2));
        assert_eq!(t.nilpotency_index(t.elem_by_label("1+x").unwrap()), None);
        assert_eq!(t.nilpotency_index(RingElem(0)), Some(1));
    }
}
