//! Finite magmas given by explicit Cayley tables, left-normed powers, and
//! per-element power profiles (order, index, period, cyclicity).
//!
//! Conventions: elements are the indices `0..N`; `table` is row-major with
//! `table[g][h] = g * h` (row = left operand). Powers are left-normed:
//! `g^1 = g`, `g^(k+1) = g^k * g`. The left-normed power sequence of any
//! element of a finite magma is eventually periodic, which is all the
//! structure this module relies on.

use serde::Serialize;
use thiserror::Error;

/// Largest supported table side. Keeps a full table comfortably in memory
/// and every scan in this crate at desk scale.
pub const MAX_MAGMA_SIZE: usize = 1024;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MagmaError {
    #[error("bad table shape: {detail}")]
    DimensionMismatch { detail: String },
    #[error("entry {value} at row {row}, column {col} is outside 0..{size}")]
    ClosureViolation { row: usize, col: usize, value: usize, size: usize },
    #[error("duplicate element name {name:?}")]
    DuplicateName { name: String },
}

/// A finite magma: `size` elements, row-major Cayley table, optional
/// per-element display names and an optional free-form descriptor.
///
/// `metadata` is a display-only field (set by generators to the family
/// descriptor); it does not take part in the text serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Magma {
    size: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
    metadata: Option<String>,
}

impl Magma {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Product `a * b` (row `a`, column `b`).
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.size && b < self.size);
        self.table[a * self.size + b]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of element `g`: its assigned name, or the index rendered
    /// as decimal when no names are present.
    pub fn display_name(&self, g: usize) -> String {
        match &self.names {
            Some(ns) => ns[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn metadata(&self) -> Option<&str> {
        self.metadata.as_deref()
    }

    pub fn set_metadata(&mut self, meta: Option<String>) {
        self.metadata = meta;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.size)
    }
}

/// Validates and wraps a Cayley table. The table must be square, nonempty,
/// no larger than [`MAX_MAGMA_SIZE`], and closed (every entry in `0..N`);
/// names, when given, must be one per element and pairwise distinct.
pub fn build_magma(
    table: Vec<Vec<usize>>,
    names: Option<Vec<String>>,
) -> Result<Magma, MagmaError> {
    let size = table.len();
    if size == 0 {
        return Err(MagmaError::DimensionMismatch { detail: "table is empty".into() });
    }
    if size > MAX_MAGMA_SIZE {
        return Err(MagmaError::DimensionMismatch {
            detail: format!("table side {size} exceeds supported maximum {MAX_MAGMA_SIZE}"),
        });
    }
    let mut flat = Vec::with_capacity(size * size);
    for (row_idx, row) in table.iter().enumerate() {
        if row.len() != size {
            return Err(MagmaError::DimensionMismatch {
                detail: format!("row {row_idx} has {} entries, expected {size}", row.len()),
            });
        }
        for (col_idx, &value) in row.iter().enumerate() {
            if value >= size {
                return Err(MagmaError::ClosureViolation {
                    row: row_idx,
                    col: col_idx,
                    value,
                    size,
                });
            }
            flat.push(value);
        }
    }
    if let Some(ns) = &names {
        if ns.len() != size {
            return Err(MagmaError::DimensionMismatch {
                detail: format!("{} names for {size} elements", ns.len()),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for n in ns {
            if !seen.insert(n.as_str()) {
                return Err(MagmaError::DuplicateName { name: n.clone() });
            }
        }
    }
    Ok(Magma { size, table: flat, names, metadata: None })
}

/// The left-normed power sequence of one element, up to its first repeat.
///
/// `seq[t]` is `g^(t+1)`; the sequence holds exactly the `order` distinct
/// powers. `index` (smallest m with g^m = g^(m+r)) and `period` (smallest
/// such r) satisfy `order = index + period - 1`.
#[derive(Clone, Debug)]
struct PowerData {
    seq: Vec<usize>,
    index: usize,
    period: usize,
}

fn power_data(m: &Magma, g: usize) -> PowerData {
    assert!(g < m.size(), "element {g} out of range 0..{}", m.size());
    let mut seq = vec![g];
    let mut first_seen = vec![usize::MAX; m.size()];
    first_seen[g] = 1; // exponent of first occurrence
    loop {
        let next = m.op(*seq.last().unwrap(), g);
        let exp = seq.len() + 1;
        if first_seen[next] != usize::MAX {
            let index = first_seen[next];
            let period = exp - index;
            return PowerData { seq, index, period };
        }
        first_seen[next] = exp;
        seq.push(next);
    }
}

impl PowerData {
    /// `g^k` for any `k >= 1`, via eventual-periodicity exponent reduction.
    fn power(&self, k: u64) -> usize {
        assert!(k >= 1, "exponent must be positive");
        let order = self.seq.len() as u64;
        if k <= order {
            return self.seq[(k - 1) as usize];
        }
        let m = self.index as u64;
        let r = self.period as u64;
        let reduced = m + (k - m) % r;
        self.seq[(reduced - 1) as usize]
    }
}

/// `g^k` (left-normed) for any positive `k`, without overflow: exponents at
/// or beyond the element's index are reduced modulo its period.
pub fn power(m: &Magma, g: usize, k: u64) -> usize {
    power_data(m, g).power(k)
}

/// The distinct left-normed powers of `g` in exponent order
/// (`g^1, g^2, ..., g^order`).
pub fn powers_of(m: &Magma, g: usize) -> Vec<usize> {
    power_data(m, g).seq
}

/// Power profile of one element.
///
/// `order` is the number of distinct powers; `index`/`period` are the
/// minimal m, r with `g^m = g^(m+r)`, so `order = index + period - 1`.
/// An element is cyclic iff `index == 1` (equivalently, iff some higher
/// power returns to the element itself); `pre_period = index - 1` is
/// present exactly for the non-cyclic elements, where it is positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementProfile {
    pub element: usize,
    pub order: usize,
    pub index: usize,
    pub period: usize,
    pub cyclic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pre_period: Option<usize>,
}

/// Profile of a single element. Meaningful on magmas that pass
/// [`check_power_associativity`]; the sequence itself is well defined on any
/// magma.
pub fn element_profile(m: &Magma, g: usize) -> ElementProfile {
    let pd = power_data(m, g);
    let cyclic = pd.index == 1;
    ElementProfile {
        element: g,
        order: pd.seq.len(),
        index: pd.index,
        period: pd.period,
        cyclic,
        pre_period: if cyclic { None } else { Some(pd.index - 1) },
    }
}

/// Profiles for all `N` elements, computed in one pass and intended to be
/// handed to the graph/coloring layers so each sequence is walked once.
pub fn element_profiles(m: &Magma) -> Vec<ElementProfile> {
    (0..m.size()).map(|g| element_profile(m, g)).collect()
}

/// Witness that a magma is not power-associative: the products of the
/// left-normed powers `g^a * g^b` and the left-normed `g^(a+b)` differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PowerAssocWitness {
    pub element: usize,
    pub a: u64,
    pub b: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerAssociativity {
    Pass,
    Fail(PowerAssocWitness),
}

impl PowerAssociativity {
    pub fn is_pass(&self) -> bool {
        matches!(self, PowerAssociativity::Pass)
    }

    pub fn witness(&self) -> Option<PowerAssocWitness> {
        match self {
            PowerAssociativity::Pass => None,
            PowerAssociativity::Fail(w) => Some(*w),
        }
    }
}

/// Verifies `g^a * g^b = g^(a+b)` for every element `g` and all
/// `1 <= a, b <= 2 * order(g)`; the first violated tuple is returned as the
/// witness.
///
/// The sweep bound suffices: every exponent at or beyond the index of `g`
/// reduces modulo the period into `[index, index + period)`, a range that
/// `[1, 2 * order]` covers on both sides of the identity, so exponent sums
/// beyond the bound add no new equalities. Elements are scanned in index
/// order; for each element the pairs with `b <= a` are scanned row-major
/// first, then the pairs with `b > a`.
pub fn check_power_associativity(m: &Magma) -> PowerAssociativity {
    for g in 0..m.size() {
        let pd = power_data(m, g);
        let bound = 2 * pd.seq.len() as u64;
        let check = |a: u64, b: u64| -> bool {
            m.op(pd.power(a), pd.power(b)) == pd.power(a + b)
        };
        for a in 1..=bound {
            for b in 1..=a {
                if !check(a, b) {
                    return PowerAssociativity::Fail(PowerAssocWitness { element: g, a, b });
                }
            }
        }
        for a in 1..=bound {
            for b in a + 1..=bound {
                if !check(a, b) {
                    return PowerAssociativity::Fail(PowerAssocWitness { element: g, a, b });
                }
            }
        }
    }
    PowerAssociativity::Pass
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Z_n under addition, written multiplicatively.
    pub(crate) fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    /// Monogenic semigroup with index m and period r: N = m + r - 1 elements,
    /// element i standing for g^(i+1), products by exponent reduction.
    pub(crate) fn monogenic_table(m: usize, r: usize) -> Vec<Vec<usize>> {
        let n = m + r - 1;
        let reduce = |s: usize| if s <= n { s } else { m + (s - m) % r };
        (1..=n).map(|i| (1..=n).map(|j| reduce(i + j) - 1).collect()).collect()
    }

    /// Independent order oracle: accumulate powers by repeated
    /// multiplication until the set stops growing.
    fn order_by_accumulation(m: &Magma, g: usize) -> usize {
        let mut seen = HashSet::new();
        let mut cur = g;
        loop {
            if !seen.insert(cur) {
                return seen.len();
            }
            cur = m.op(cur, g);
        }
    }

    #[test]
    fn rejects_non_square_table() {
        let err = build_magma(vec![vec![0, 1], vec![1]], None).unwrap_err();
        assert!(matches!(err, MagmaError::DimensionMismatch { .. }));
        let err = build_magma(vec![], None).unwrap_err();
        assert!(matches!(err, MagmaError::DimensionMismatch { .. }));
    }

    #[test]
    fn rejects_open_table_with_offending_cell() {
        let err = build_magma(vec![vec![0, 2], vec![1, 0]], None).unwrap_err();
        assert_eq!(
            err,
            MagmaError::ClosureViolation { row: 0, col: 1, value: 2, size: 2 }
        );
    }

    #[test]
    fn rejects_duplicate_names() {
        let err = build_magma(
            vec![vec![0, 1], vec![1, 0]],
            Some(vec!["e".into(), "e".into()]),
        )
        .unwrap_err();
        assert_eq!(err, MagmaError::DuplicateName { name: "e".into() });
    }

    #[test]
    fn power_in_cyclic_six() {
        let m = build_magma(cyclic_table(6), None).unwrap();
        assert_eq!(power(&m, 1, 6), 0);
        assert_eq!(power(&m, 1, 1), 1);
        assert_eq!(power(&m, 1, 601), 1);
        let p = element_profile(&m, 1);
        assert_eq!((p.order, p.index, p.period, p.cyclic), (6, 1, 6, true));
        assert_eq!(p.pre_period, None);
    }

    #[test]
    fn monogenic_three_two_profile_and_power() {
        let m = build_magma(monogenic_table(3, 2), None).unwrap();
        // g^9 reduces to g^3 (index 3, period 2).
        assert_eq!(power(&m, 0, 9), 2);
        let p = element_profile(&m, 0);
        assert_eq!((p.order, p.index, p.period, p.cyclic), (4, 3, 2, false));
        assert_eq!(p.pre_period, Some(2));
        // Remaining elements: g^2 non-cyclic with pre-period 1, g^3 cyclic of
        // order 2, g^4 idempotent.
        let profiles = element_profiles(&m);
        assert_eq!(profiles[1].pre_period, Some(1));
        assert_eq!((profiles[1].order, profiles[1].cyclic), (2, false));
        assert_eq!((profiles[2].order, profiles[2].cyclic), (2, true));
        assert_eq!((profiles[3].order, profiles[3].cyclic), (1, true));
    }

    #[test]
    fn order_matches_accumulation_oracle() {
        let tables = [cyclic_table(12), monogenic_table(5, 3), monogenic_table(1, 7)];
        for t in tables {
            let m = build_magma(t, None).unwrap();
            for g in 0..m.size() {
                assert_eq!(element_profile(&m, g).order, order_by_accumulation(&m, g));
            }
        }
    }

    #[test]
    fn power_additivity_within_sweep_bound() {
        let m = build_magma(monogenic_table(4, 6), None).unwrap();
        for g in 0..m.size() {
            let order = element_profile(&m, g).order as u64;
            for a in 1..=2 * order {
                for b in 1..=2 * order {
                    assert_eq!(m.op(power(&m, g, a), power(&m, g, b)), power(&m, g, a + b));
                }
            }
        }
    }

    #[test]
    fn cyclic_iff_some_higher_power_returns() {
        let m = build_magma(monogenic_table(3, 4), None).unwrap();
        for g in 0..m.size() {
            let p = element_profile(&m, g);
            let returns = (1..=p.order as u64).any(|n| power(&m, g, n + 1) == g);
            assert_eq!(p.cyclic, returns, "element {g}");
        }
    }

    #[test]
    fn associative_families_pass_the_checker() {
        for t in [cyclic_table(1), cyclic_table(9), monogenic_table(4, 3)] {
            let m = build_magma(t, None).unwrap();
            assert!(check_power_associativity(&m).is_pass());
        }
    }

    #[test]
    fn two_element_counterexample_rejected_with_square_witness() {
        // g*g = h, h*h = g, g*h = g, h*g = h: the left-normed g^4 is h while
        // g^2 * g^2 = g.
        let m = build_magma(vec![vec![1, 0], vec![1, 0]], None).unwrap();
        let result = check_power_associativity(&m);
        assert_eq!(
            result.witness(),
            Some(PowerAssocWitness { element: 0, a: 2, b: 2 })
        );
    }

    #[test]
    fn idempotent_row_magma_is_power_associative() {
        // x*y = x for all x, y: every element is idempotent.
        let m = build_magma(vec![vec![0, 0], vec![1, 1]], None).unwrap();
        assert!(check_power_associativity(&m).is_pass());
        for g in 0..2 {
            let p = element_profile(&m, g);
            assert_eq!((p.order, p.cyclic), (1, true));
        }
    }
}
