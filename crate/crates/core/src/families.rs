//! Finite windows over three symbolic infinite families: the infinite
//! cyclic group (powers of a generator `t`), the direct product of the
//! infinite cyclic group with Z_k, and the free monogenic semigroup
//! `{x, x^2, x^3, ...}`.
//!
//! All power arithmetic is closed-form, so windows are exact shadows of the
//! infinite structures: an edge appears in a window graph if and only if a
//! power witness with exponent at most the window's exponent bound `E`
//! exists. Relations whose only witnesses exceed `E` are deliberately
//! absent, and every verification statement here is window-relative in that
//! sense.
//!
//! The family interface is four operations — [`sym_power`],
//! [`solve_power_equation`], the canonical element order, and
//! [`enumerate_window`] — so further families can be added by extending the
//! two enums and the match arms in those operations.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{gcd, solve_linear_congruence};
use crate::bitset::BitSet;
use crate::coloring::{paper_color_finite, ColorTag, Coloring};
use crate::graph::PowerGraph;
use crate::limits;

/// Largest allowed window bound (coordinate or exponent).
pub const MAX_WINDOW_BOUND: u64 = 1 << 20;
/// Largest allowed coordinate magnitude in a hand-built element. Together
/// with [`MAX_WINDOW_BOUND`] this keeps every in-range power inside i64.
pub const MAX_COORD: u64 = 1 << 40;
/// Largest supported modulus for the product family (the finite part must
/// fit in a Cayley table).
pub const MAX_MODULUS: u64 = 1024;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("invalid window: {detail}")]
    InvalidWindow { detail: String },
    #[error("invalid family: {detail}")]
    InvalidFamily { detail: String },
    #[error("cannot parse family {input:?}: expected z, zxz(k), or free")]
    BadFamilyName { input: String },
    #[error(
        "no exponent pair (m, n) with m, n <= {bound} relates {member} to \
         representative {representative}; increase the exponent bound"
    )]
    NoRelationInBound { representative: String, member: String, bound: u64 },
    #[error("window holds {count} elements, above the limit {limit} \
             (raise POWERGRAPH_WINDOW_LIMIT to override)")]
    TooManyElements { count: usize, limit: usize },
}

/// One of the built-in symbolic infinite families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// The infinite cyclic group, written multiplicatively as powers of a
    /// generator `t`; the element `t^0` is the identity.
    Z,
    /// The direct product of the infinite cyclic group with the cyclic
    /// group of order `k`.
    ZxZk { k: u64 },
    /// The free monogenic semigroup `{x, x^2, x^3, ...}` (no identity).
    FreeMonogenic,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Z => write!(f, "Z"),
            Family::ZxZk { k } => write!(f, "ZxZ({k})"),
            Family::FreeMonogenic => write!(f, "FreeMonogenic"),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    /// Accepts `z`, `zxz(k)` (also `zxzk(k)`), and `free` (also
    /// `freemono`, `freemonogenic`), case-insensitively.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let lower = s.trim().to_ascii_lowercase();
        let bad = || FamilyError::BadFamilyName { input: s.to_string() };
        match lower.as_str() {
            "z" => return Ok(Family::Z),
            "free" | "freemono" | "freemonogenic" => return Ok(Family::FreeMonogenic),
            _ => {}
        }
        let rest = lower
            .strip_prefix("zxzk(")
            .or_else(|| lower.strip_prefix("zxz("))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let k: u64 = rest.trim().parse().map_err(|_| bad())?;
        let family = Family::ZxZk { k };
        validate_family(&family)?;
        Ok(family)
    }
}

fn validate_family(family: &Family) -> Result<(), FamilyError> {
    if let Family::ZxZk { k } = family {
        if *k < 1 || *k > MAX_MODULUS {
            return Err(FamilyError::InvalidFamily {
                detail: format!("modulus {k} must be in 1..={MAX_MODULUS}"),
            });
        }
    }
    Ok(())
}

/// An element of a symbolic family, carrying its own family data.
///
/// Coordinates are validated on construction (|a| and e at most
/// [`MAX_COORD`], modulus at most 2^20) so that every power with exponent
/// at most [`MAX_WINDOW_BOUND`] stays inside 64-bit arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WindowElement {
    /// `t^a`; `a = 0` is the identity, the only finite-order element.
    Z { a: i64 },
    /// `(t^a, b)` with `b` in `0..k`; finite order exactly when `a = 0`.
    ZxZk { k: u64, a: i64, b: u64 },
    /// `x^e` with `e >= 1`; always of infinite order.
    FreeMonogenic { e: u64 },
}

impl WindowElement {
    pub fn z(a: i64) -> Self {
        assert!(a.unsigned_abs() <= MAX_COORD, "coordinate {a} out of range");
        WindowElement::Z { a }
    }

    pub fn zxzk(k: u64, a: i64, b: u64) -> Self {
        assert!((1..=MAX_COORD).contains(&k), "modulus {k} out of range");
        assert!(a.unsigned_abs() <= MAX_COORD, "coordinate {a} out of range");
        assert!(b < k, "second coordinate {b} must lie in 0..{k}");
        WindowElement::ZxZk { k, a, b }
    }

    pub fn free(e: u64) -> Self {
        assert!((1..=MAX_COORD).contains(&e), "exponent {e} out of range");
        WindowElement::FreeMonogenic { e }
    }

    pub fn family(&self) -> Family {
        match self {
            WindowElement::Z { .. } => Family::Z,
            WindowElement::ZxZk { k, .. } => Family::ZxZk { k: *k },
            WindowElement::FreeMonogenic { .. } => Family::FreeMonogenic,
        }
    }

    /// Infinite order means no two distinct positive powers coincide.
    pub fn has_infinite_order(&self) -> bool {
        match self {
            WindowElement::Z { a } => *a != 0,
            WindowElement::ZxZk { a, .. } => *a != 0,
            WindowElement::FreeMonogenic { .. } => true,
        }
    }

    /// Canonical sort key: elements are ordered by coordinate magnitude,
    /// then sign, then the finite coordinate.
    fn sort_key(&self) -> (u8, u64, i64, u64, u64) {
        match self {
            WindowElement::Z { a } => (0, a.unsigned_abs(), *a, 0, 0),
            WindowElement::ZxZk { k, a, b } => (1, a.unsigned_abs(), *a, *b, *k),
            WindowElement::FreeMonogenic { e } => (2, *e, 0, 0, 0),
        }
    }
}

impl Ord for WindowElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for WindowElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WindowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WindowElement::Z { a } => write!(f, "t^{a}"),
            WindowElement::ZxZk { a, b, .. } => write!(f, "({a},{b})"),
            WindowElement::FreeMonogenic { e } if *e == 1 => write!(f, "x"),
            WindowElement::FreeMonogenic { e } => write!(f, "x^{e}"),
        }
    }
}

impl Serialize for WindowElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The underlying binary operation of the element's family. Panics if the
/// two elements come from different families.
pub fn family_op(x: &WindowElement, y: &WindowElement) -> WindowElement {
    match (x, y) {
        (WindowElement::Z { a }, WindowElement::Z { a: a2 }) => WindowElement::Z { a: a + a2 },
        (WindowElement::ZxZk { k, a, b }, WindowElement::ZxZk { k: k2, a: a2, b: b2 }) => {
            assert_eq!(k, k2, "elements from different product families");
            WindowElement::ZxZk { k: *k, a: a + a2, b: (b + b2) % k }
        }
        (WindowElement::FreeMonogenic { e }, WindowElement::FreeMonogenic { e: e2 }) => {
            WindowElement::FreeMonogenic { e: e + e2 }
        }
        _ => panic!("elements from different families"),
    }
}

/// The `j`-th power of `x` in closed form (`j >= 1`). The result may lie
/// outside any window; callers filter.
pub fn sym_power(x: &WindowElement, j: u64) -> WindowElement {
    assert!(j >= 1, "exponents are positive");
    assert!(j <= MAX_WINDOW_BOUND, "exponent {j} out of range");
    match x {
        WindowElement::Z { a } => WindowElement::Z { a: a * j as i64 },
        WindowElement::ZxZk { k, a, b } => {
            WindowElement::ZxZk { k: *k, a: a * j as i64, b: (b * j) % k }
        }
        WindowElement::FreeMonogenic { e } => WindowElement::FreeMonogenic { e: e * j },
    }
}

/// A finite enumeration window: coordinates are bounded by `W` (|a| <= W
/// for the cyclic coordinate, exponent <= W for the free semigroup) and
/// power-relation searches are bounded by `E` (exponents m, n, j <= E).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    coord_bound: u64,
    exponent_bound: u64,
}

impl Window {
    pub fn new(coord_bound: u64, exponent_bound: u64) -> Result<Self, FamilyError> {
        let check = |name: &str, v: u64| -> Result<(), FamilyError> {
            if v < 1 || v > MAX_WINDOW_BOUND {
                return Err(FamilyError::InvalidWindow {
                    detail: format!("{name} bound {v} must be in 1..={MAX_WINDOW_BOUND}"),
                });
            }
            Ok(())
        };
        check("coordinate", coord_bound)?;
        check("exponent", exponent_bound)?;
        Ok(Window { coord_bound, exponent_bound })
    }

    pub fn coord_bound(&self) -> u64 {
        self.coord_bound
    }

    pub fn exponent_bound(&self) -> u64 {
        self.exponent_bound
    }

    pub fn contains(&self, x: &WindowElement) -> bool {
        match x {
            WindowElement::Z { a } | WindowElement::ZxZk { a, .. } => {
                a.unsigned_abs() <= self.coord_bound
            }
            WindowElement::FreeMonogenic { e } => (1..=self.coord_bound).contains(e),
        }
    }
}

/// Number of window elements without materializing them.
pub fn window_size(family: &Family, window: &Window) -> Result<usize, FamilyError> {
    validate_family(family)?;
    let w = window.coord_bound;
    let count = match family {
        Family::Z => 2 * w + 1,
        Family::ZxZk { k } => (2 * w + 1) * k,
        Family::FreeMonogenic => w,
    };
    Ok(count as usize)
}

/// All window elements in canonical ascending order. Fails if the window
/// holds more elements than the configured limit.
pub fn enumerate_window(
    family: &Family,
    window: &Window,
) -> Result<Vec<WindowElement>, FamilyError> {
    let count = window_size(family, window)?;
    let limit = limits::window_element_limit();
    if count > limit {
        return Err(FamilyError::TooManyElements { count, limit });
    }
    let w = window.coord_bound as i64;
    let mut elements = Vec::with_capacity(count);
    match family {
        Family::Z => elements.extend((-w..=w).map(|a| WindowElement::z(a))),
        Family::ZxZk { k } => {
            for a in -w..=w {
                elements.extend((0..*k).map(|b| WindowElement::zxzk(*k, a, b)));
            }
        }
        Family::FreeMonogenic => {
            elements.extend((1..=window.coord_bound).map(WindowElement::free))
        }
    }
    elements.sort_unstable();
    Ok(elements)
}

/// All `y` in the window with `y^n = x^m`, in canonical ascending order.
///
/// Pre: `x` has infinite order and `1 <= m, n <= E` (panics otherwise).
pub fn solve_power_equation(
    x: &WindowElement,
    m: u64,
    n: u64,
    window: &Window,
) -> Vec<WindowElement> {
    assert!(x.has_infinite_order(), "power equations are solved for infinite-order elements");
    let e = window.exponent_bound;
    assert!((1..=e).contains(&m) && (1..=e).contains(&n), "exponents must lie in 1..=E");
    let w = window.coord_bound as i64;
    match x {
        WindowElement::Z { a } => {
            let t = m as i64 * a;
            if t % n as i64 != 0 {
                return Vec::new();
            }
            let c = t / n as i64;
            if c.unsigned_abs() <= w as u64 { vec![WindowElement::z(c)] } else { Vec::new() }
        }
        WindowElement::ZxZk { k, a, b } => {
            let t = m as i64 * a;
            if t % n as i64 != 0 {
                return Vec::new();
            }
            let c = t / n as i64;
            if c.unsigned_abs() > w as u64 {
                return Vec::new();
            }
            // Second coordinate: n*d ≡ m*b (mod k).
            solve_linear_congruence(n % k, (m * b) % k, *k)
                .into_iter()
                .map(|d| WindowElement::zxzk(*k, c, d))
                .collect()
        }
        WindowElement::FreeMonogenic { e: exp } => {
            let t = m * exp;
            if t % n != 0 {
                return Vec::new();
            }
            let c = t / n;
            if (1..=window.coord_bound).contains(&c) {
                vec![WindowElement::free(c)]
            } else {
                Vec::new()
            }
        }
    }
}

/// Union of [`solve_power_equation`] over all exponent pairs `m, n <= E`,
/// i.e. the window shadow of the component of `x`. Pre: `x` has infinite
/// order.
pub fn component_window(x: &WindowElement, window: &Window) -> BTreeSet<WindowElement> {
    let e = window.exponent_bound;
    let mut out = BTreeSet::new();
    for m in 1..=e {
        for n in 1..=e {
            out.extend(solve_power_equation(x, m, n, window));
        }
    }
    out
}

/// The smallest exponent `j <= bound` with `y^j = z`, in closed form.
/// Elements of different families are never powers of one another.
pub fn power_witness(y: &WindowElement, z: &WindowElement, bound: u64) -> Option<u64> {
    match (y, z) {
        (WindowElement::Z { a }, WindowElement::Z { a: c }) => {
            if *a == 0 {
                return (y == z).then_some(1);
            }
            if c % a != 0 {
                return None;
            }
            let j = c / a;
            (j >= 1 && j as u64 <= bound).then_some(j as u64)
        }
        (WindowElement::ZxZk { k, a, b }, WindowElement::ZxZk { k: k2, a: c, b: d }) => {
            if k != k2 {
                return None;
            }
            if *a == 0 {
                if *c != 0 {
                    return None;
                }
                // j*b ≡ d (mod k) repeats with period dividing k, so any
                // witness at all implies one at most min(bound, k).
                return (1..=bound.min(*k)).find(|j| (j * b) % k == *d);
            }
            if c % a != 0 {
                return None;
            }
            let j = c / a;
            if j < 1 || j as u64 > bound {
                return None;
            }
            ((j as u64 * b) % k == *d).then_some(j as u64)
        }
        (WindowElement::FreeMonogenic { e }, WindowElement::FreeMonogenic { e: c }) => {
            if c % e != 0 {
                return None;
            }
            let j = c / e;
            (j >= 1 && j <= bound).then_some(j)
        }
        _ => None,
    }
}

/// The lexicographically minimal `(m, n)` with `m, n <= bound` and
/// `x^m = y^n`, or [`FamilyError::NoRelationInBound`] when none exists.
pub fn minimal_relation(
    x: &WindowElement,
    y: &WindowElement,
    bound: u64,
) -> Result<(u64, u64), FamilyError> {
    for m in 1..=bound {
        let xm = sym_power(x, m);
        for n in 1..=bound {
            if sym_power(y, n) == xm {
                return Ok((m, n));
            }
        }
    }
    Err(FamilyError::NoRelationInBound {
        representative: x.to_string(),
        member: y.to_string(),
        bound,
    })
}

/// The lexicographically minimal `(m, n)` over all positive exponents with
/// `x^m = y^n`, in closed form and without a search bound. `None` when no
/// relation exists at any exponent (different families, opposite signs, or
/// a finite-order coordinate).
///
/// Window parts need the unbounded form: bounded relatedness chains compose
/// by multiplying exponents, so an element can share a part with the
/// representative while its own minimal exponent pair exceeds the window's
/// search bound.
fn minimal_relation_unbounded(x: &WindowElement, y: &WindowElement) -> Option<(u64, u64)> {
    match (x, y) {
        (WindowElement::Z { a }, WindowElement::Z { a: c }) => scaling_pair(*a, *c),
        (WindowElement::ZxZk { k, a, b }, WindowElement::ZxZk { k: k2, a: c, b: d }) => {
            if k != k2 {
                return None;
            }
            let (m0, n0) = scaling_pair(*a, *c)?;
            // The first coordinate forces (m, n) = (m0·t, n0·t); the second
            // asks for m·b ≡ n·d (mod k), i.e. t·(m0·b − n0·d) ≡ 0 (mod k),
            // whose smallest positive solution is k / gcd(m0·b − n0·d, k).
            let lhs = (m0 % k) * b % k;
            let rhs = (n0 % k) * d % k;
            let delta = (lhs + k - rhs) % k;
            let t = k / gcd(delta, *k);
            Some((m0 * t, n0 * t))
        }
        (WindowElement::FreeMonogenic { e }, WindowElement::FreeMonogenic { e: c }) => {
            let g = gcd(*e, *c);
            Some((c / g, e / g))
        }
        _ => None,
    }
}

/// Minimal positive `(m, n)` with `m·a = n·c`, or `None` when a coordinate
/// is zero or the signs differ (positive powers preserve sign).
fn scaling_pair(a: i64, c: i64) -> Option<(u64, u64)> {
    if a == 0 || c == 0 || (a < 0) != (c < 0) {
        return None;
    }
    let (a, c) = (a.unsigned_abs(), c.unsigned_abs());
    let g = gcd(a, c);
    Some((c / g, a / g))
}

/// A window's elements together with their power graph. Vertex `i` of the
/// graph is `elements[i]`; the arc `v -> w` is present exactly when
/// `w = v^j` for some `j <= E`.
pub struct WindowGraphData {
    pub elements: Vec<WindowElement>,
    pub graph: PowerGraph,
}

impl WindowGraphData {
    pub fn index_of(&self, x: &WindowElement) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }
}

/// Builds the window power graph by direct power enumeration.
pub fn window_graph(family: &Family, window: &Window) -> Result<WindowGraphData, FamilyError> {
    let elements = enumerate_window(family, window)?;
    let n = elements.len();
    let mut directed = vec![BitSet::new(n); n];
    for (v, x) in elements.iter().enumerate() {
        for j in 1..=window.exponent_bound {
            let p = sym_power(x, j);
            if !window.contains(&p) {
                continue;
            }
            if let Ok(w) = elements.binary_search(&p) {
                directed[v].insert(w);
            }
        }
    }
    Ok(WindowGraphData { elements, graph: PowerGraph::from_directed(directed) })
}

/// One color part of a window coloring: a representative of infinite order
/// and the elements it claimed, in canonical ascending order (the
/// representative is always first and carries the tag `C(1,1)`).
#[derive(Clone, Debug, Serialize)]
pub struct WindowPart {
    pub representative: WindowElement,
    pub members: Vec<WindowElement>,
}

/// A full coloring of a window: every element gets a tag; the infinite
/// part is split into [`WindowPart`]s.
#[derive(Clone, Debug)]
pub struct WindowColoring {
    pub family: Family,
    pub window: Window,
    /// All window elements in canonical ascending order.
    pub elements: Vec<WindowElement>,
    /// Tag of `elements[i]`.
    pub tags: Vec<ColorTag>,
    /// Parts of the infinite-order portion, by ascending representative.
    pub parts: Vec<WindowPart>,
}

impl WindowColoring {
    pub fn tag_of(&self, x: &WindowElement) -> Option<&ColorTag> {
        self.elements.binary_search(x).ok().map(|i| &self.tags[i])
    }

    pub fn palette(&self) -> BTreeSet<ColorTag> {
        self.tags.iter().copied().collect()
    }

    /// The same assignment as an index-based coloring over the window
    /// graph's vertices (for the generic properness checkers).
    pub fn as_coloring(&self) -> Coloring {
        let mut coloring = Coloring::new_unassigned(self.tags.len());
        for (v, tag) in self.tags.iter().enumerate() {
            coloring.assign(v, *tag);
        }
        coloring
    }
}

/// Colors a whole window.
///
/// Finite-order elements form the window's finite part — a cyclic group —
/// and receive the finite coloring of that group's Cayley table. The
/// infinite-order elements are partitioned into parts, the transitive
/// closure of window-component overlap: two elements share a part exactly
/// when a chain of power relations witnessed inside the window links them.
/// Each part's representative is its canonically minimal member, and every
/// member `y` is tagged `C(m, n)` for the lexicographically minimal
/// exponent pair with `representative^m = y^n`, computed in closed form
/// with no exponent cap — a member linked to the representative only
/// through intermediate elements can need exponents beyond the window's
/// search bound.
///
/// The result is proper on the window graph: adjacent elements are
/// directly related within the bound and so share a part, while two
/// members of one part sharing a tag would lie in one solution set of
/// `representative^m = y^n`, whose distinct members are never powers of
/// one another. A small exponent bound can still split one true component
/// into several parts; the `parts` list reports exactly how the window was
/// partitioned, so such splits stay visible to callers.
pub fn color_window(family: &Family, window: &Window) -> Result<WindowColoring, FamilyError> {
    let elements = enumerate_window(family, window)?;
    let n = elements.len();
    let mut tags: Vec<Option<ColorTag>> = vec![None; n];

    // Finite part: for Z just the identity, for ZxZk the subgroup {(0, b)},
    // both isomorphic to a finite cyclic group.
    let finite_modulus = match family {
        Family::Z => Some(1u64),
        Family::ZxZk { k } => Some(*k),
        Family::FreeMonogenic => None,
    };
    if let Some(k) = finite_modulus {
        let table = crate::gen::cyclic_magma(k as usize)
            .expect("finite part modulus is validated by enumerate_window");
        let finite_coloring = paper_color_finite(&table);
        for b in 0..k {
            let elem = match family {
                Family::Z => WindowElement::z(0),
                Family::ZxZk { k } => WindowElement::zxzk(*k, 0, b),
                Family::FreeMonogenic => unreachable!(),
            };
            let idx = elements.binary_search(&elem).expect("finite part lies in the window");
            tags[idx] = finite_coloring.get(b as usize);
        }
    }

    let mut parts = Vec::new();
    let mut claimed = vec![false; n];
    for i in 0..n {
        if claimed[i] || !elements[i].has_infinite_order() {
            continue;
        }
        // Ascending scan order makes `elements[i]` the canonical minimum of
        // the part it starts: any smaller member would already have pulled
        // `elements[i]` into its own part (relatedness is symmetric).
        let rep = elements[i];
        claimed[i] = true;
        let mut frontier = vec![i];
        let mut member_idx = Vec::new();
        while let Some(j) = frontier.pop() {
            member_idx.push(j);
            for y in component_window(&elements[j], window) {
                debug_assert!(y.has_infinite_order());
                let yi =
                    elements.binary_search(&y).expect("component members lie in the window");
                if !claimed[yi] {
                    claimed[yi] = true;
                    frontier.push(yi);
                }
            }
        }
        member_idx.sort_unstable();
        let mut members = Vec::with_capacity(member_idx.len());
        for &j in &member_idx {
            let y = elements[j];
            let (m, n) = minimal_relation_unbounded(&rep, &y).ok_or_else(|| {
                FamilyError::NoRelationInBound {
                    representative: rep.to_string(),
                    member: y.to_string(),
                    bound: window.exponent_bound,
                }
            })?;
            tags[j] = Some(ColorTag::Relation { m, n });
            members.push(y);
        }
        parts.push(WindowPart { representative: rep, members });
    }

    let tags = tags
        .into_iter()
        .map(|t| t.expect("every window element is colored"))
        .collect();
    Ok(WindowColoring { family: *family, window: *window, elements, tags, parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_proper_coloring;
    use crate::graph::connected_components;

    fn win(w: u64, e: u64) -> Window {
        Window::new(w, e).unwrap()
    }

    fn z(a: i64) -> WindowElement {
        WindowElement::z(a)
    }

    fn zz(k: u64, a: i64, b: u64) -> WindowElement {
        WindowElement::zxzk(k, a, b)
    }

    fn x(e: u64) -> WindowElement {
        WindowElement::free(e)
    }

    fn tag(s: &str) -> ColorTag {
        // Test-side parser for the rendered tag strings.
        let (ns, body) = s.split_at(1);
        let body = body.strip_prefix('(').unwrap().strip_suffix(')').unwrap();
        let nums: Vec<u64> = body.split(',').map(|p| p.trim().parse().unwrap()).collect();
        match ns {
            "A" => ColorTag::Cyclic { order: nums[0], rank: nums[1] },
            "B" => ColorTag::PrePeriod { p: nums[0] },
            "C" => ColorTag::Relation { m: nums[0], n: nums[1] },
            _ => panic!("unknown namespace {ns}"),
        }
    }

    #[test]
    fn enumeration_is_canonical() {
        assert_eq!(
            enumerate_window(&Family::Z, &win(2, 4)).unwrap(),
            vec![z(0), z(-1), z(1), z(-2), z(2)]
        );
        assert_eq!(
            enumerate_window(&Family::ZxZk { k: 2 }, &win(1, 4)).unwrap(),
            vec![zz(2, 0, 0), zz(2, 0, 1), zz(2, -1, 0), zz(2, -1, 1), zz(2, 1, 0), zz(2, 1, 1)]
        );
        assert_eq!(
            enumerate_window(&Family::FreeMonogenic, &win(3, 4)).unwrap(),
            vec![x(1), x(2), x(3)]
        );
    }

    #[test]
    fn closed_form_powers_match_repeated_multiplication() {
        let samples =
            [z(3), z(-2), z(0), zz(12, 5, 7), zz(2, 1, 1), zz(7, -3, 4), x(1), x(2)];
        for s in samples {
            let mut acc = s;
            for j in 1..=8 {
                assert_eq!(sym_power(&s, j), acc, "{s}^{j}");
                acc = family_op(&acc, &s);
            }
        }
        assert_eq!(sym_power(&z(3), 2), z(6));
        assert_eq!(sym_power(&zz(2, 1, 1), 2), zz(2, 2, 0));
        assert_eq!(sym_power(&x(1), 5), x(5));
    }

    #[test]
    fn display_forms() {
        assert_eq!(z(-2).to_string(), "t^-2");
        assert_eq!(zz(4, 3, 1).to_string(), "(3,1)");
        assert_eq!(x(1).to_string(), "x");
        assert_eq!(x(7).to_string(), "x^7");
    }

    #[test]
    fn family_names_parse_and_render() {
        assert_eq!("z".parse::<Family>().unwrap(), Family::Z);
        assert_eq!("ZxZ(4)".parse::<Family>().unwrap(), Family::ZxZk { k: 4 });
        assert_eq!("zxzk(12)".parse::<Family>().unwrap(), Family::ZxZk { k: 12 });
        assert_eq!("FREE".parse::<Family>().unwrap(), Family::FreeMonogenic);
        for family in [Family::Z, Family::ZxZk { k: 9 }, Family::FreeMonogenic] {
            assert_eq!(family.to_string().parse::<Family>().unwrap(), family);
        }
        assert!(matches!("q8".parse::<Family>(), Err(FamilyError::BadFamilyName { .. })));
        assert!(matches!("zxz(0)".parse::<Family>(), Err(FamilyError::InvalidFamily { .. })));
    }

    #[test]
    fn solve_power_equation_fixtures() {
        let w = win(5, 20);
        assert_eq!(solve_power_equation(&z(1), 2, 2, &w), vec![z(1)]);
        assert_eq!(solve_power_equation(&z(1), 1, 2, &w), Vec::new());
        assert_eq!(
            solve_power_equation(&zz(2, 1, 0), 2, 2, &win(2, 8)),
            vec![zz(2, 1, 0), zz(2, 1, 1)]
        );
    }

    #[test]
    fn solve_power_equation_matches_window_scan() {
        let w = win(6, 6);
        let cases: Vec<(Family, WindowElement)> = vec![
            (Family::Z, z(2)),
            (Family::Z, z(-3)),
            (Family::ZxZk { k: 12 }, zz(12, 1, 5)),
            (Family::ZxZk { k: 4 }, zz(4, -2, 3)),
            (Family::FreeMonogenic, x(2)),
        ];
        for (family, elem) in cases {
            let all = enumerate_window(&family, &w).unwrap();
            for m in 1..=w.exponent_bound() {
                for n in 1..=w.exponent_bound() {
                    let fast = solve_power_equation(&elem, m, n, &w);
                    let target = sym_power(&elem, m);
                    let slow: Vec<WindowElement> = all
                        .iter()
                        .copied()
                        .filter(|y| sym_power(y, n) == target)
                        .collect();
                    let mut slow_sorted = slow;
                    slow_sorted.sort_unstable();
                    assert_eq!(fast, slow_sorted, "{elem} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn component_window_fixtures() {
        let comp = component_window(&z(1), &win(5, 20));
        assert_eq!(comp.into_iter().collect::<Vec<_>>(), vec![z(1), z(2), z(3), z(4), z(5)]);
        let comp = component_window(&z(-1), &win(5, 20));
        assert_eq!(
            comp.into_iter().collect::<Vec<_>>(),
            vec![z(-1), z(-2), z(-3), z(-4), z(-5)]
        );
        let comp = component_window(&zz(2, 1, 0), &win(2, 8));
        assert_eq!(
            comp.into_iter().collect::<Vec<_>>(),
            vec![zz(2, 1, 0), zz(2, 1, 1), zz(2, 2, 0), zz(2, 2, 1)]
        );
    }

    #[test]
    fn components_never_contain_finite_order_elements() {
        let w = win(4, 8);
        for elem in enumerate_window(&Family::ZxZk { k: 6 }, &w).unwrap() {
            if !elem.has_infinite_order() {
                continue;
            }
            for y in component_window(&elem, &w) {
                assert!(y.has_infinite_order(), "{y} in component of {elem}");
            }
        }
    }

    #[test]
    fn proper_powers_of_infinite_order_elements_are_distinct() {
        for elem in [z(1), z(-7), zz(5, 2, 3), x(3)] {
            for m in 1..=10 {
                for j in 2..=5 {
                    assert_ne!(sym_power(&elem, m * j), sym_power(&elem, m));
                }
            }
        }
    }

    #[test]
    fn minimal_relation_fixtures() {
        assert_eq!(minimal_relation(&z(1), &z(3), 20).unwrap(), (3, 1));
        assert_eq!(minimal_relation(&z(5), &z(5), 20).unwrap(), (1, 1));
        match minimal_relation(&z(1), &z(50), 24) {
            Err(FamilyError::NoRelationInBound { bound: 24, .. }) => {}
            other => panic!("expected NoRelationInBound, got {other:?}"),
        }
    }

    #[test]
    fn product_family_minimal_pair_confirmed_by_exhaustive_scan() {
        // Independent route: scan every (m, n) pair in lexicographic order
        // with plain power equality and record the first hit.
        let rep = zz(2, 1, 0);
        let member = zz(2, 1, 1);
        let mut scan_hit = None;
        'outer: for m in 1..=8 {
            for n in 1..=8 {
                if sym_power(&rep, m) == sym_power(&member, n) {
                    scan_hit = Some((m, n));
                    break 'outer;
                }
            }
        }
        assert_eq!(scan_hit, Some((2, 2)));
        assert_eq!(minimal_relation(&rep, &member, 8).unwrap(), (2, 2));
    }

    #[test]
    fn window_graph_structure_for_z() {
        let data = window_graph(&Family::Z, &win(3, 10)).unwrap();
        assert_eq!(
            data.elements,
            vec![z(0), z(-1), z(1), z(-2), z(2), z(-3), z(3)]
        );
        assert_eq!(
            data.graph.edges(),
            vec![(1, 3), (1, 5), (2, 4), (2, 6)],
            "each generator connects to its multiples; signs never mix"
        );
        let all: Vec<usize> = (0..7).collect();
        let comps = connected_components(&data.graph, &all);
        assert_eq!(comps.len(), 3, "identity, negatives, positives");
        assert_eq!(data.index_of(&z(-2)), Some(3));
        assert_eq!(data.index_of(&z(9)), None);
    }

    #[test]
    fn window_graph_respects_exponent_bound() {
        // With E = 2, t^1 -- t^3 (witness 3) must be absent while chains of
        // doublings remain.
        let data = window_graph(&Family::Z, &win(4, 2)).unwrap();
        let idx = |a: i64| data.index_of(&z(a)).unwrap();
        let mut expected = vec![
            (idx(-1), idx(-2)),
            (idx(-2), idx(-4)),
            (idx(1), idx(2)),
            (idx(2), idx(4)),
        ];
        expected.iter_mut().for_each(|p| {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        });
        expected.sort_unstable();
        assert_eq!(data.graph.edges(), expected);
    }

    #[test]
    fn color_window_z_fixture() {
        let wc = color_window(&Family::Z, &win(5, 20)).unwrap();
        assert_eq!(wc.tag_of(&z(0)), Some(&tag("A(1,1)")));
        assert_eq!(wc.tag_of(&z(3)), Some(&tag("C(3,1)")));
        assert_eq!(wc.tag_of(&z(-4)), Some(&tag("C(4,1)")));
        assert_eq!(wc.parts.len(), 2);
        assert_eq!(wc.parts[0].representative, z(-1));
        assert_eq!(wc.parts[1].representative, z(1));
        assert_eq!(wc.tag_of(&z(1)), Some(&tag("C(1,1)")));
        let palette = wc.palette();
        assert_eq!(palette.len(), 6);
        assert!(palette.contains(&tag("A(1,1)")));
        assert!(palette.contains(&tag("C(5,1)")));
    }

    #[test]
    fn color_window_product_fixture() {
        let wc = color_window(&Family::ZxZk { k: 2 }, &win(2, 8)).unwrap();
        assert_eq!(wc.tag_of(&zz(2, 0, 0)), Some(&tag("A(1,1)")));
        assert_eq!(wc.tag_of(&zz(2, 0, 1)), Some(&tag("A(2,1)")));
        assert_eq!(wc.tag_of(&zz(2, 1, 0)), Some(&tag("C(1,1)")));
        assert_eq!(wc.tag_of(&zz(2, 1, 1)), Some(&tag("C(2,2)")));
        assert_eq!(wc.tag_of(&zz(2, 2, 0)), Some(&tag("C(2,1)")));
        assert_eq!(wc.tag_of(&zz(2, 2, 1)), Some(&tag("C(4,2)")));
        assert_eq!(wc.parts.len(), 2);
    }

    #[test]
    fn color_window_reports_part_splits() {
        // E = 3 relates x^5 to nothing but itself, so it becomes its own
        // reported part. x^4 and x^6 reach x only through x^2 — they join
        // x's part via the closure, and their tags' minimal exponents (4
        // and 6) exceed the search bound E.
        let wc = color_window(&Family::FreeMonogenic, &win(6, 3)).unwrap();
        let reps: Vec<WindowElement> =
            wc.parts.iter().map(|p| p.representative).collect();
        assert_eq!(reps, vec![x(1), x(5)]);
        assert_eq!(wc.parts[0].members, vec![x(1), x(2), x(3), x(4), x(6)]);
        assert_eq!(wc.parts[1].members, vec![x(5)]);
        assert_eq!(wc.tag_of(&x(4)), Some(&tag("C(4,1)")));
        assert_eq!(wc.tag_of(&x(6)), Some(&tag("C(6,1)")));
        assert_eq!(wc.tag_of(&x(5)), Some(&tag("C(1,1)")));
        assert_eq!(wc.palette().len(), 5);
    }

    #[test]
    fn window_colorings_are_proper() {
        let cases = [
            (Family::Z, win(6, 10)),
            (Family::ZxZk { k: 3 }, win(3, 9)),
            (Family::ZxZk { k: 4 }, win(4, 6)),
            (Family::FreeMonogenic, win(8, 6)),
        ];
        for (family, window) in cases {
            let data = window_graph(&family, &window).unwrap();
            let wc = color_window(&family, &window).unwrap();
            assert_eq!(data.elements, wc.elements);
            let violations =
                verify_proper_coloring(&data.graph, &wc.as_coloring()).unwrap();
            assert!(violations.is_empty(), "{family}: {violations:?}");
        }
    }

    #[test]
    fn finite_and_infinite_parts_never_touch() {
        let data = window_graph(&Family::ZxZk { k: 4 }, &win(3, 6)).unwrap();
        for (u, v) in data.graph.edges() {
            assert_eq!(
                data.elements[u].has_infinite_order(),
                data.elements[v].has_infinite_order(),
                "edge {u}-{v} mixes finite and infinite order"
            );
        }
    }

    #[test]
    fn window_validation() {
        assert!(matches!(Window::new(0, 5), Err(FamilyError::InvalidWindow { .. })));
        assert!(matches!(Window::new(5, 0), Err(FamilyError::InvalidWindow { .. })));
        assert!(Window::new(MAX_WINDOW_BOUND, 1).is_ok());
        assert!(matches!(
            Window::new(MAX_WINDOW_BOUND + 1, 1),
            Err(FamilyError::InvalidWindow { .. })
        ));
        let huge = Window::new(MAX_WINDOW_BOUND, 1).unwrap();
        assert!(matches!(
            enumerate_window(&Family::Z, &huge),
            Err(FamilyError::TooManyElements { .. })
        ));
    }

    #[test]
    fn power_witness_closed_form() {
        assert_eq!(power_witness(&z(2), &z(6), 10), Some(3));
        assert_eq!(power_witness(&z(2), &z(7), 10), None);
        assert_eq!(power_witness(&z(2), &z(-2), 10), None);
        assert_eq!(power_witness(&z(0), &z(0), 10), Some(1));
        assert_eq!(power_witness(&zz(6, 1, 2), &zz(6, 3, 0), 10), Some(3));
        assert_eq!(power_witness(&zz(6, 1, 2), &zz(6, 3, 1), 10), None);
        assert_eq!(power_witness(&zz(6, 0, 2), &zz(6, 0, 4), 10), Some(2));
        assert_eq!(power_witness(&x(3), &x(9), 10), Some(3));
        assert_eq!(power_witness(&x(3), &x(9), 2), None);
        assert_eq!(power_witness(&z(1), &x(1), 10), None);
    }
}
