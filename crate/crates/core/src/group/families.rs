//! Group construction from family descriptions.
//!
//! Grammar: `Z:<n>` cyclic, `D:<2n>` dihedral of order 2n (n >= 1),
//! `Q:<4n>` dicyclic of order 4n (n >= 2), `S:<n>` symmetric (n <= 5),
//! `A:<n>` alternating (n <= 5), `X(<spec>,<spec>,...)` direct product.
//! Orders not matching a family's constraints are parse errors.

use super::GroupTable;
use crate::error::Error;
use crate::Result;

/// Default bound on constructed group orders.
pub const DEFAULT_ORDER_CAP: u64 = 512;

/// Parses a group description and builds its multiplication table, using the
/// default order cap.
pub fn make_group(spec: &str) -> Result<GroupTable> {
    make_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

/// `make_group` with an explicit order cap; the order is computed from the
/// description and checked before any table is materialized.
pub fn make_group_with_cap(spec: &str, cap: u64) -> Result<GroupTable> {
    let parsed = FamilySpec::parse(spec.trim())?;
    let order = parsed.order();
    if order > cap {
        return Err(Error::CapExceeded { order, cap });
    }
    let (labels, mul) = parsed.build();
    GroupTable::from_table(spec.trim().to_string(), labels, mul)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum FamilySpec {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    Symmetric(u32),
    Alternating(u32),
    Product(Vec<FamilySpec>),
}

impl FamilySpec {
    fn parse(s: &str) -> Result<FamilySpec> {
        let bad = |msg: String| Err(Error::Parse(msg));
        if let Some(rest) = s.strip_prefix("X(") {
            let Some(inner) = rest.strip_suffix(')') else {
                return bad(format!("unclosed product in {s:?}"));
            };
            let mut factors = Vec::new();
            let mut depth = 0usize;
            let mut start = 0;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        if depth == 0 {
                            return bad(format!("unbalanced parentheses in {s:?}"));
                        }
                        depth -= 1;
                    }
                    ',' if depth == 0 => {
                        factors.push(FamilySpec::parse(&inner[start..i])?);
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            if depth != 0 {
                return bad(format!("unbalanced parentheses in {s:?}"));
            }
            factors.push(FamilySpec::parse(&inner[start..])?);
            if factors.len() < 2 {
                return bad(format!("product needs at least two factors in {s:?}"));
            }
            return Ok(FamilySpec::Product(factors));
        }
        let Some((family, value)) = s.split_once(':') else {
            return bad(format!("expected <family>:<n> or X(...), got {s:?}"));
        };
        let n: u64 = match value.parse() {
            Ok(n) => n,
            Err(_) => return bad(format!("invalid number {value:?} in {s:?}")),
        };
        match family {
            "Z" => {
                if n == 0 {
                    bad("cyclic group order must be positive".into())
                } else {
                    Ok(FamilySpec::Cyclic(n))
                }
            }
            "D" => {
                if n >= 2 && n.is_multiple_of(2) {
                    Ok(FamilySpec::Dihedral(n))
                } else {
                    bad(format!(
                        "dihedral order must be even and at least 2, got {n}"
                    ))
                }
            }
            "Q" => {
                if n >= 8 && n.is_multiple_of(4) {
                    Ok(FamilySpec::Dicyclic(n))
                } else {
                    bad(format!(
                        "dicyclic order must be a multiple of 4 and at least 8, got {n}"
                    ))
                }
            }
            "S" => {
                if (1..=5).contains(&n) {
                    Ok(FamilySpec::Symmetric(n as u32))
                } else {
                    bad(format!("symmetric degree must be between 1 and 5, got {n}"))
                }
            }
            "A" => {
                if (1..=5).contains(&n) {
                    Ok(FamilySpec::Alternating(n as u32))
                } else {
                    bad(format!(
                        "alternating degree must be between 1 and 5, got {n}"
                    ))
                }
            }
            other => bad(format!("unsupported family {other:?}")),
        }
    }

    fn order(&self) -> u64 {
        match self {
            FamilySpec::Cyclic(n) | FamilySpec::Dihedral(n) | FamilySpec::Dicyclic(n) => *n,
            FamilySpec::Symmetric(n) => factorial(*n),
            FamilySpec::Alternating(n) => factorial(*n).div_ceil(2),
            // Saturating: an astronomically large product should fail the
            // cap check, not overflow before reaching it.
            FamilySpec::Product(factors) => factors
                .iter()
                .map(|f| f.order())
                .fold(1u64, |acc, o| acc.saturating_mul(o)),
        }
    }

    fn build(&self) -> (Vec<String>, Vec<u16>) {
        match self {
            FamilySpec::Cyclic(n) => cyclic(*n as usize),
            FamilySpec::Dihedral(n) => dihedral(*n as usize),
            FamilySpec::Dicyclic(n) => dicyclic(*n as usize),
            FamilySpec::Symmetric(n) => permutation_group(*n as usize, false),
            FamilySpec::Alternating(n) => permutation_group(*n as usize, true),
            FamilySpec::Product(factors) => product(factors),
        }
    }
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

/// Power-of-`a` label: 1, a, a^2, ...
fn rotation_label(i: usize) -> String {
    match i {
        0 => "1".to_string(),
        1 => "a".to_string(),
        _ => format!("a^{i}"),
    }
}

/// Reflection-word label: b, ab, a^2b, ...
fn reflection_label(i: usize) -> String {
    match i {
        0 => "b".to_string(),
        1 => "ab".to_string(),
        _ => format!("a^{i}b"),
    }
}

fn cyclic(n: usize) -> (Vec<String>, Vec<u16>) {
    let labels = (0..n).map(rotation_label).collect();
    let mut mul = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            mul[i * n + j] = ((i + j) % n) as u16;
        }
    }
    (labels, mul)
}

/// Dihedral group of order `2k`: indices `0..k` are rotations `a^i`, indices
/// `k..2k` are reflections `a^i b`, with `b a^j = a^-j b`.
fn dihedral(order: usize) -> (Vec<String>, Vec<u16>) {
    let k = order / 2;
    let labels = (0..k)
        .map(rotation_label)
        .chain((0..k).map(reflection_label))
        .collect();
    let mut mul = vec![0u16; order * order];
    let rot = |i: usize| i as u16;
    let refl = |i: usize| (k + i) as u16;
    for i in 0..k {
        for j in 0..k {
            mul[i * order + j] = rot((i + j) % k);
            mul[i * order + (k + j)] = refl((i + j) % k);
            mul[(k + i) * order + j] = refl((i + k - j) % k);
            mul[(k + i) * order + (k + j)] = rot((i + k - j) % k);
        }
    }
    (labels, mul)
}

/// Dicyclic group of order `4t`: `a` has order `2t` (indices `0..2t`),
/// indices `2t..4t` are `a^i b`, with `b^2 = a^t` and `b a^j = a^-j b`.
fn dicyclic(order: usize) -> (Vec<String>, Vec<u16>) {
    let m = order / 2; // order of a
    let t = m / 2;
    let labels = (0..m)
        .map(rotation_label)
        .chain((0..m).map(reflection_label))
        .collect();
    let mut mul = vec![0u16; order * order];
    let rot = |i: usize| i as u16;
    let refl = |i: usize| (m + i) as u16;
    for i in 0..m {
        for j in 0..m {
            mul[i * order + j] = rot((i + j) % m);
            mul[i * order + (m + j)] = refl((i + j) % m);
            mul[(m + i) * order + j] = refl((i + m - j) % m);
            // (a^i b)(a^j b) = a^(i-j) b^2 = a^(i-j+t)
            mul[(m + i) * order + (m + j)] = rot((i + m - j + t) % m);
        }
    }
    (labels, mul)
}

/// Symmetric or alternating group on `m` points; elements are permutations in
/// lexicographic order (identity first), composed as `(pq)(x) = p(q(x))`.
fn permutation_group(m: usize, even_only: bool) -> (Vec<String>, Vec<u16>) {
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut current: Vec<u8> = (0..m as u8).collect();
    loop {
        if !even_only || permutation_is_even(&current) {
            perms.push(current.clone());
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    let n = perms.len();
    let index: std::collections::HashMap<&[u8], u16> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i as u16))
        .collect();
    let mut mul = vec![0u16; n * n];
    let mut composed = vec![0u8; m];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            for x in 0..m {
                composed[x] = p[q[x] as usize];
            }
            mul[i * n + j] = index[composed.as_slice()];
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    (labels, mul)
}

fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn permutation_is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Disjoint cycle notation on 1-based points, fixed points omitted; the
/// identity is written `(1)`.
fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        loop {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x] as usize;
            if x == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("(1)");
    }
    out
}

/// Direct product with row-major index layout, so the all-identity tuple is
/// index 0. Labels are tuples of the factor labels.
fn product(factors: &[FamilySpec]) -> (Vec<String>, Vec<u16>) {
    let parts: Vec<(Vec<String>, Vec<u16>)> = factors.iter().map(|f| f.build()).collect();
    let sizes: Vec<usize> = parts.iter().map(|(labels, _)| labels.len()).collect();
    let n: usize = sizes.iter().product();

    let decompose = |mut idx: usize| -> Vec<usize> {
        let mut coords = vec![0usize; sizes.len()];
        for k in (0..sizes.len()).rev() {
            coords[k] = idx % sizes[k];
            idx /= sizes[k];
        }
        coords
    };
    let compose = |coords: &[usize]| -> usize {
        coords
            .iter()
            .zip(&sizes)
            .fold(0usize, |acc, (&c, &s)| acc * s + c)
    };

    let labels = (0..n)
        .map(|idx| {
            let coords = decompose(idx);
            let inner: Vec<&str> = coords
                .iter()
                .enumerate()
                .map(|(k, &c)| parts[k].0[c].as_str())
                .collect();
            format!("({})", inner.join(","))
        })
        .collect();

    let mut mul = vec![0u16; n * n];
    let mut combined = vec![0usize; sizes.len()];
    for i in 0..n {
        let ci = decompose(i);
        for j in 0..n {
            let cj = decompose(j);
            for k in 0..sizes.len() {
                let sk = sizes[k];
                combined[k] = parts[k].1[ci[k] * sk + cj[k]] as usize;
            }
            mul[i * n + j] = compose(&combined) as u16;
        }
    }
    (labels, mul)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors() {
        for bad in [
            "Z:0", "D:7", "D:0", "Q:4", "Q:10", "S:6", "A:0", "W:5", "Z:x", "X(Z:2)", "X(Z:2", "Z",
            "",
        ] {
            assert!(
                matches!(make_group(bad), Err(Error::Parse(_))),
                "expected parse error for {bad:?}"
            );
        }
    }

    #[test]
    fn cap_is_checked_before_building() {
        assert!(matches!(
            make_group("Z:513"),
            Err(Error::CapExceeded {
                order: 513,
                cap: 512
            })
        ));
        assert!(make_group_with_cap("Z:513", 1024).is_ok());
        assert!(matches!(
            make_group_with_cap("X(S:5,S:5)", 1024),
            Err(Error::CapExceeded {
                order: 14400,
                cap: 1024
            })
        ));
        // Product orders saturate rather than overflow on the way to the
        // cap check.
        let huge = format!("X({})", ["S:5"; 12].join(","));
        assert!(matches!(
            make_group(&huge),
            Err(Error::CapExceeded { cap: 512, .. })
        ));
    }

    #[test]
    fn family_orders() {
        for (spec, order) in [
            ("Z:1", 1),
            ("Z:12", 12),
            ("D:2", 2),
            ("D:14", 14),
            ("Q:8", 8),
            ("Q:100", 100),
            ("S:1", 1),
            ("S:5", 120),
            ("A:3", 3),
            ("A:5", 60),
            ("X(Z:2,Z:3)", 6),
            ("X(Z:2,Z:2,Z:2)", 8),
        ] {
            assert_eq!(make_group(spec).unwrap().order(), order, "{spec}");
        }
    }

    #[test]
    fn d4_is_klein_four() {
        let g = make_group("D:4").unwrap();
        assert_eq!(g.order(), 4);
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(g.mul(x, y), g.mul(y, x));
            }
        }
        assert!(g.elements().all(|x| g.element_order(x) <= 2));
    }

    #[test]
    fn symmetric_labels_are_cycles() {
        let g = make_group("S:3").unwrap();
        assert_eq!(g.label(0), "(1)");
        let labels: Vec<&str> = g.elements().map(|x| g.label(x)).collect();
        for want in ["(12)", "(13)", "(23)", "(123)", "(132)"] {
            assert!(labels.contains(&want), "missing {want} in {labels:?}");
        }
    }

    #[test]
    fn alternating_is_even_half() {
        let a4 = make_group("A:4").unwrap();
        assert_eq!(a4.order(), 12);
        let orders: Vec<usize> = a4.elements().map(|x| a4.element_order(x)).collect();
        assert_eq!(orders.iter().filter(|&&k| k == 2).count(), 3);
        assert_eq!(orders.iter().filter(|&&k| k == 3).count(), 8);
    }

    #[test]
    fn product_labels_are_tuples() {
        let g = make_group("X(Z:2,Z:2)").unwrap();
        assert_eq!(g.labels(), &["(1,1)", "(1,a)", "(a,1)", "(a,a)"]);
    }

    #[test]
    fn nested_products_parse() {
        let g = make_group("X(Z:2,X(Z:2,Z:2))").unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.label(0), "(1,(1,1))");
    }
}
