//! Polynomial relations and the construction of `Z_n[x_1..x_k]/(relations)`.
//!
//! Relations whose leading monomial (degree-then-lex) is a pure power
//! `x_i^d` with a unit coefficient are used as rewrite rules; they cut the
//! monomials down to the finite staircase `{x^e : e_i < d_i}`. The remaining
//! relations generate a submodule of that free `Z_n`-module, and the ring is
//! the set of its cosets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

/// Largest intermediate free module (`n^|staircase|` elements) we enumerate.
const MAX_AMBIENT: usize = 1 << 16;

/// A polynomial with integer coefficients over a fixed list of variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    /// Exponent vector -> nonzero coefficient.
    pub terms: BTreeMap<Vec<u32>, i64>,
}

impl Poly {
    /// Parses expressions such as `x^2+x+1`, `3x^2-2`, `xy-2` or `2*x*y`.
    /// Variable names are matched greedily against `vars`.
    pub fn parse(text: &str, vars: &[String]) -> Result<Poly> {
        let src: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| Error::Parse(format!("relation `{text}`: {msg}"));
        if src.is_empty() {
            return Err(err("empty"));
        }
        let mut pos = 0;
        let mut poly = Poly::default();
        while pos < src.len() {
            let mut sign = 1i64;
            if src[pos] == '+' || src[pos] == '-' {
                if src[pos] == '-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(err("expected `+` or `-`"));
            }
            let mut coef = 1i64;
            let mut exps = vec![0u32; vars.len()];
            let mut factors = 0;
            while pos < src.len() && src[pos] != '+' && src[pos] != '-' {
                if src[pos] == '*' {
                    pos += 1;
                    continue;
                }
                if src[pos].is_ascii_digit() {
                    let start = pos;
                    while pos < src.len() && src[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let num: String = src[start..pos].iter().collect();
                    coef *= num.parse::<i64>().map_err(|_| err("bad integer"))?;
                } else {
                    let rest: String = src[pos..].iter().collect();
                    let var = vars
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| rest.starts_with(v.as_str()))
                        .max_by_key(|(_, v)| v.len())
                        .ok_or_else(|| err(&format!("unknown symbol at `{rest}`")))?;
                    pos += var.1.chars().count();
                    let mut e = 1u32;
                    if pos < src.len() && src[pos] == '^' {
                        pos += 1;
                        let start = pos;
                        while pos < src.len() && src[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        if start == pos {
                            return Err(err("missing exponent"));
                        }
                        let num: String = src[start..pos].iter().collect();
                        e = num.parse().map_err(|_| err("bad exponent"))?;
                    }
                    exps[var.0] += e;
                }
                factors += 1;
            }
            if factors == 0 {
                return Err(err("empty term"));
            }
            *poly.terms.entry(exps).or_insert(0) += sign * coef;
        }
        poly.terms.retain(|_, c| *c != 0);
        Ok(poly)
    }
}

/// Result of building a quotient algebra: element representatives as
/// coefficient vectors over `basis`, with operation tables on indices.
pub(crate) struct QuotientTables {
    pub add: Vec<u8>,
    pub mul: Vec<u8>,
    pub labels: Vec<String>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    (1..n).find(|&b| a * b % n == 1)
}

/// Degree-then-lex comparison; `priority[0]` is the most significant variable.
fn cmp_monomial(a: &[u32], b: &[u32], priority: &[usize]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        priority
            .iter()
            .map(|&i| a[i].cmp(&b[i]))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in 0..k {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

struct Rule {
    var: usize,
    degree: u32,
    /// `x_var^degree` equals this combination of smaller monomials.
    tail: Vec<(Vec<u32>, u64)>,
}

struct Reducer<'a> {
    n: u64,
    rules: &'a [Rule],
    index: &'a HashMap<Vec<u32>, usize>,
    memo: HashMap<Vec<u32>, Vec<u64>>,
}

impl Reducer<'_> {
    fn reduce(&mut self, m: &[u32]) -> Vec<u64> {
        let size = self.index.len();
        if let Some(&i) = self.index.get(m) {
            let mut v = vec![0; size];
            v[i] = 1;
            return v;
        }
        if let Some(v) = self.memo.get(m) {
            return v.clone();
        }
        let rule = self
            .rules
            .iter()
            .find(|r| m[r.var] >= r.degree)
            .expect("monomial outside the staircase has a reducible variable");
        let mut rest = m.to_vec();
        rest[rule.var] -= rule.degree;
        let mut out = vec![0u64; size];
        for (tm, c) in &rule.tail {
            let prod: Vec<u32> = rest.iter().zip(tm).map(|(a, b)| a + b).collect();
            let sub = self.reduce(&prod);
            for (o, s) in out.iter_mut().zip(sub) {
                *o = (*o + c * s) % self.n;
            }
        }
        self.memo.insert(m.to_vec(), out.clone());
        out
    }
}

pub(crate) fn build_quotient(
    base: usize,
    variables: &[String],
    relations: &[String],
) -> Result<QuotientTables> {
    if base < 2 {
        return Err(Error::InvalidSpec(
            "quotient base must be at least 2".into(),
        ));
    }
    if variables.is_empty() {
        return Err(Error::InvalidSpec(
            "quotient needs at least one variable".into(),
        ));
    }
    let n = base as u64;
    let k = variables.len();
    let polys: Vec<BTreeMap<Vec<u32>, u64>> = relations
        .iter()
        .map(|r| {
            Poly::parse(r, variables).map(|p| {
                p.terms
                    .into_iter()
                    .map(|(m, c)| (m, c.rem_euclid(base as i64) as u64))
                    .filter(|(_, c)| *c != 0)
                    .collect()
            })
        })
        .collect::<Result<_>>()?;

    // Pick a variable priority under which every variable has a rewrite rule.
    let mut chosen: Option<(Vec<usize>, Vec<Rule>, Vec<usize>)> = None;
    for priority in permutations(k) {
        let mut best: Vec<Option<(usize, u32)>> = vec![None; k];
        for (ri, p) in polys.iter().enumerate() {
            let Some((lead, lc)) = p.iter().max_by(|a, b| cmp_monomial(a.0, b.0, &priority)) else {
                continue;
            };
            let support: Vec<usize> = (0..k).filter(|&i| lead[i] > 0).collect();
            if support.len() != 1 || gcd(*lc, n) != 1 {
                continue;
            }
            let var = support[0];
            if best[var].is_none_or(|(_, d)| lead[var] < d) {
                best[var] = Some((ri, lead[var]));
            }
        }
        if best.iter().all(Option::is_some) {
            let mut rules = Vec::new();
            let mut used = Vec::new();
            for (var, b) in best.iter().enumerate() {
                let (ri, degree) = b.unwrap();
                used.push(ri);
                let p = &polys[ri];
                let lead = p
                    .keys()
                    .max_by(|a, b| cmp_monomial(a, b, &priority))
                    .unwrap();
                let inv = inverse_mod(p[lead], n).unwrap();
                let tail = p
                    .iter()
                    .filter(|(m, _)| *m != lead)
                    .map(|(m, c)| (m.clone(), (n - c * inv % n) % n))
                    .collect();
                rules.push(Rule { var, degree, tail });
            }
            chosen = Some((priority, rules, used));
            break;
        }
    }
    let (priority, rules, used) = chosen.ok_or_else(|| {
        Error::InvalidSpec(
            "every variable needs a relation whose leading term is a pure power with unit coefficient"
                .into(),
        )
    })?;

    // Staircase basis in increasing monomial order.
    let mut basis: Vec<Vec<u32>> = vec![vec![]];
    for var in 0..k {
        let d = rules.iter().find(|r| r.var == var).unwrap().degree;
        basis = basis
            .into_iter()
            .flat_map(|m| {
                (0..d).map(move |e| {
                    let mut m = m.clone();
                    m.push(e);
                    m
                })
            })
            .collect();
    }
    basis.sort_by(|a, b| cmp_monomial(a, b, &priority));
    let s = basis.len();
    let ambient = (base as f64).powi(s as i32);
    if ambient > MAX_AMBIENT as f64 {
        return Err(Error::InvalidSpec(format!(
            "presentation needs a free module of {base}^{s} elements"
        )));
    }
    let ambient = ambient as usize;
    let index: HashMap<Vec<u32>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut red = Reducer {
        n,
        rules: &rules,
        index: &index,
        memo: HashMap::new(),
    };

    let mut basis_mul = vec![vec![0u64; s]; s * s];
    for i in 0..s {
        for j in 0..s {
            let m: Vec<u32> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
            basis_mul[i * s + j] = red.reduce(&m);
        }
    }

    let encode = |v: &[u64]| {
        v.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * base + c as usize)
    };
    let decode = |mut code: usize| {
        let mut v = vec![0u64; s];
        for c in v.iter_mut() {
            *c = (code % base) as u64;
            code /= base;
        }
        v
    };
    let vadd =
        |a: &[u64], b: &[u64]| -> Vec<u64> { a.iter().zip(b).map(|(x, y)| (x + y) % n).collect() };
    let vmul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; s];
        for (i, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, &y) in b.iter().enumerate().filter(|(_, y)| **y != 0) {
                for (o, t) in out.iter_mut().zip(&basis_mul[i * s + j]) {
                    *o = (*o + x * y % n * t) % n;
                }
            }
        }
        out
    };

    // Submodule generated by (basis monomial) * (non-rule relation).
    let mut in_kernel = vec![false; ambient];
    in_kernel[0] = true;
    let mut kernel = vec![0usize];
    for (ri, p) in polys.iter().enumerate() {
        if used.contains(&ri) {
            continue;
        }
        for m in &basis {
            let mut g = vec![0u64; s];
            for (tm, c) in p {
                let prod: Vec<u32> = m.iter().zip(tm).map(|(a, b)| a + b).collect();
                for (o, x) in g.iter_mut().zip(red.reduce(&prod)) {
                    *o = (*o + c * x) % n;
                }
            }
            if g.iter().all(|&c| c == 0) || in_kernel[encode(&g)] {
                continue;
            }
            let snapshot = kernel.clone();
            for &kc in &snapshot {
                let kv = decode(kc);
                let mut acc = kv.clone();
                loop {
                    acc = vadd(&acc, &g);
                    let code = encode(&acc);
                    if code == kc {
                        break;
                    }
                    if !in_kernel[code] {
                        in_kernel[code] = true;
                        kernel.push(code);
                    }
                }
            }
        }
    }
    if !ambient.is_multiple_of(kernel.len()) {
        return Err(Error::InvalidSpec(
            "relation submodule is not a subgroup".into(),
        ));
    }
    let order = ambient / kernel.len();
    if order > crate::ring::MAX_ORDER {
        return Err(Error::OrderTooLarge(order));
    }
    if order < 2 {
        return Err(Error::InvalidSpec(
            "presentation collapses to the zero ring".into(),
        ));
    }

    // Canonical representative: fewest terms, then smallest leading data.
    let key = |code: usize| {
        let v = decode(code);
        let nnz = v.iter().filter(|&&c| c != 0).count() as u64;
        let mut k = vec![nnz];
        k.extend(v.iter().rev());
        k
    };
    let mut codes: Vec<usize> = (0..ambient).collect();
    codes.sort_by_cached_key(|&c| key(c));
    let mut coset_of = vec![usize::MAX; ambient];
    let mut reps: Vec<Vec<u64>> = Vec::with_capacity(order);
    for &c in &codes {
        if coset_of[c] != usize::MAX {
            continue;
        }
        let id = reps.len();
        let v = decode(c);
        for &kc in &kernel {
            coset_of[encode(&vadd(&v, &decode(kc)))] = id;
        }
        reps.push(v);
    }
    debug_assert_eq!(reps.len(), order);

    let mut add = vec![0u8; order * order];
    let mut mul = vec![0u8; order * order];
    for i in 0..order {
        for j in 0..order {
            add[i * order + j] = coset_of[encode(&vadd(&reps[i], &reps[j]))] as u8;
            mul[i * order + j] = coset_of[encode(&vmul(&reps[i], &reps[j]))] as u8;
        }
    }
    let labels = reps
        .iter()
        .map(|v| format_poly(v, &basis, variables))
        .collect();
    Ok(QuotientTables { add, mul, labels })
}

/// Formats a coefficient vector as `2+x+3xy^2`, constant term first.
fn format_poly(v: &[u64], basis: &[Vec<u32>], vars: &[String]) -> String {
    let mut present: Vec<(&Vec<u32>, u64)> = basis
        .iter()
        .zip(v)
        .filter(|(_, c)| **c != 0)
        .map(|(m, c)| (m, *c))
        .collect();
    // constant first, then by degree; within a degree x before y, x^2 before xy
    present.sort_by(|(a, _), (b, _)| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    let mut terms = Vec::new();
    for (m, c) in present {
        let c = &c;
        let mono: String = m
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, x)| {
                if *e == 1 {
                    x.clone()
                } else {
                    format!("{x}^{e}")
                }
            })
            .collect();
        terms.push(match (c, mono.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => mono,
            (_, false) => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_terms() {
        let p = Poly::parse("3x^2 - 2", &vars(&["x"])).unwrap();
        assert_eq!(p.terms[&vec![2]], 3);
        assert_eq!(p.terms[&vec![0]], -2);
        let q = Poly::parse("xy-2", &vars(&["x", "y"])).unwrap();
        assert_eq!(q.terms[&vec![1, 1]], 1);
        let r = Poly::parse("2*x*y + y^2", &vars(&["x", "y"])).unwrap();
        assert_eq!(r.terms[&vec![1, 1]], 2);
        assert_eq!(r.terms[&vec![0, 2]], 1);
        assert!(Poly::parse("x^", &vars(&["x"])).is_err());
        assert!(Poly::parse("z", &vars(&["x"])).is_err());
        assert!(Poly::parse("", &vars(&["x"])).is_err());
    }

    #[test]
    fn cancelling_terms_vanish() {
        let p = Poly::parse("x - x + 1", &vars(&["x"])).unwrap();
        assert_eq!(p.terms.len(), 1);
    }

    #[test]
    fn z4_2x_x2_has_eight_elements() {
        let q = build_quotient(4, &vars(&["x"]), &vars(&["2x", "x^2"])).unwrap();
        assert_eq!(q.labels.len(), 8);
        assert_eq!(q.labels[0], "0");
        assert_eq!(q.labels[1], "1");
        assert!(q.labels.contains(&"x".to_string()));
        assert!(!q.labels.contains(&"3x".to_string()));
    }

    #[test]
    fn missing_rule_is_rejected() {
        assert!(matches!(
            build_quotient(4, &vars(&["x"]), &vars(&["2x"])),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn unit_leading_coefficient_is_normalised() {
        // 3x^2 = 2 in Z_8 means x^2 = 6.
        let q = build_quotient(8, &vars(&["x"]), &vars(&["3x^2-2", "x^5"])).unwrap();
        assert_eq!(q.labels.len(), 32);
    }
}
