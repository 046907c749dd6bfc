//! Cayley-table generators for the built-in families, a tiny spec grammar
//! (`cyclic(6)`, `product(dihedral(4),cyclic(3))`, ...) shared by the CLI
//! and the C interface, and the default verification corpus.

use std::fmt;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::magma::{build_magma, Magma, MagmaError};

/// Seed for the pseudo-random product specs in the default corpus; fixed so
/// the corpus is identical on every run and platform.
const CORPUS_PRODUCT_SEED: u64 = 0x504f_5747_5250_4831;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("{spec}: {detail}")]
    ParameterOutOfRange { spec: String, detail: String },
    #[error("bad family spec {input:?}: {detail}")]
    BadSpec { input: String, detail: String },
    #[error("cannot read {path}: {detail}")]
    FileRead { path: String, detail: String },
    #[error("cannot parse {path}: {source}")]
    FileParse {
        path: String,
        #[source]
        source: crate::io::ParseError,
    },
    #[error(transparent)]
    Magma(#[from] MagmaError),
}

/// A recipe for a finite magma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(usize),
    Dihedral(usize),
    /// Monogenic semigroup with the given index and period.
    Monogenic { index: usize, period: usize },
    Symmetric(usize),
    Quaternion8,
    FullTransformation(usize),
    Product(Box<FamilySpec>, Box<FamilySpec>),
    FromFile(PathBuf),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic({n})"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral({n})"),
            FamilySpec::Monogenic { index, period } => write!(f, "monogenic({index},{period})"),
            FamilySpec::Symmetric(n) => write!(f, "symmetric({n})"),
            FamilySpec::Quaternion8 => write!(f, "quaternion8"),
            FamilySpec::FullTransformation(n) => write!(f, "full_transformation({n})"),
            FamilySpec::Product(a, b) => write!(f, "product({a},{b})"),
            FamilySpec::FromFile(p) => write!(f, "from_file({})", p.display()),
        }
    }
}

impl FamilySpec {
    /// Element count of the generated magma (None for file inputs).
    pub fn size(&self) -> Option<usize> {
        match self {
            FamilySpec::Cyclic(n) => Some(*n),
            FamilySpec::Dihedral(n) => Some(2 * n),
            FamilySpec::Monogenic { index, period } => Some(index + period - 1),
            FamilySpec::Symmetric(n) => Some((1..=*n).product()),
            FamilySpec::Quaternion8 => Some(8),
            FamilySpec::FullTransformation(n) => Some(n.pow(*n as u32)),
            FamilySpec::Product(a, b) => Some(a.size()? * b.size()?),
            FamilySpec::FromFile(_) => None,
        }
    }
}

fn out_of_range(spec: &FamilySpec, detail: impl Into<String>) -> GenError {
    GenError::ParameterOutOfRange { spec: spec.to_string(), detail: detail.into() }
}

fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// The cyclic group Z_n written multiplicatively; element `i` is the class
/// of `i`, so the identity is index 0.
pub fn cyclic_magma(n: usize) -> Result<Magma, GenError> {
    let spec = FamilySpec::Cyclic(n);
    if n < 1 || n > crate::magma::MAX_MAGMA_SIZE {
        return Err(out_of_range(&spec, "order must be in 1..=1024"));
    }
    finish(cyclic_table(n), &spec)
}

/// Dihedral group of order 2n: indices `0..n` are the rotations `r^i`,
/// indices `n..2n` the reflections `s r^i`, with `s r s = r^-1`.
fn dihedral_table(n: usize) -> Vec<Vec<usize>> {
    let size = 2 * n;
    let mut table = vec![vec![0; size]; size];
    for a in 0..n {
        for b in 0..n {
            table[a][b] = (a + b) % n; // r^a r^b
            table[a][n + b] = n + (b + n - a) % n; // r^a (s r^b) = s r^(b-a)
            table[n + a][b] = n + (a + b) % n; // (s r^a) r^b
            table[n + a][n + b] = (b + n - a) % n; // (s r^a)(s r^b) = r^(b-a)
        }
    }
    table
}

/// All permutations of `0..n` in lexicographic order of their image tuples.
fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// Composition table over an enumerated list of maps `0..n -> 0..n`
/// (`(a*b)(x) = a(b(x))`). The list must be closed under composition.
fn composition_table(maps: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let index_of = |f: &[usize]| -> usize {
        maps.binary_search_by(|probe| probe.as_slice().cmp(f)).expect("closed under composition")
    };
    maps.iter()
        .map(|a| {
            maps.iter()
                .map(|b| {
                    let composed: Vec<usize> = (0..b.len()).map(|x| a[b[x]]).collect();
                    index_of(&composed)
                })
                .collect()
        })
        .collect()
}

fn quaternion_table() -> Vec<Vec<usize>> {
    // Elements 0..8 stand for 1, -1, i, -i, j, -j, k, -k.
    // unit_mul[u][v] = (resulting unit, sign flip) for units 1,i,j,k.
    const UNIT_MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let idx = |unit: usize, neg: bool| unit * 2 + usize::from(neg);
    let mut table = vec![vec![0; 8]; 8];
    for ua in 0..4 {
        for na in [false, true] {
            for ub in 0..4 {
                for nb in [false, true] {
                    let (unit, flip) = UNIT_MUL[ua][ub];
                    table[idx(ua, na)][idx(ub, nb)] = idx(unit, na ^ nb ^ flip);
                }
            }
        }
    }
    table
}

/// All maps `0..n -> 0..n` in lexicographic order of their image tuples.
fn all_maps(n: usize) -> Vec<Vec<usize>> {
    let count = n.pow(n as u32);
    (0..count)
        .map(|code| {
            let mut f = vec![0; n];
            let mut c = code;
            for slot in (0..n).rev() {
                f[slot] = c % n;
                c /= n;
            }
            f
        })
        .collect()
}

fn finish(table: Vec<Vec<usize>>, spec: &FamilySpec) -> Result<Magma, GenError> {
    let mut m = build_magma(table, None)?;
    m.set_metadata(Some(spec.to_string()));
    Ok(m)
}

/// Builds the magma described by `spec`. Parameters outside the supported
/// ranges (see the per-family constructors) are rejected.
pub fn generate(spec: &FamilySpec) -> Result<Magma, GenError> {
    match spec {
        FamilySpec::Cyclic(n) => cyclic_magma(*n),
        FamilySpec::Dihedral(n) => {
            if *n < 1 || 2 * n > crate::magma::MAX_MAGMA_SIZE {
                return Err(out_of_range(spec, "rotation count must be in 1..=512"));
            }
            finish(dihedral_table(*n), spec)
        }
        FamilySpec::Monogenic { index, period } => {
            let (m, r) = (*index, *period);
            if m < 1 || r < 1 || m + r - 1 > crate::magma::MAX_MAGMA_SIZE {
                return Err(out_of_range(spec, "need index, period >= 1 and index+period-1 <= 1024"));
            }
            let n = m + r - 1;
            let reduce = |s: usize| if s <= n { s } else { m + (s - m) % r };
            let table =
                (1..=n).map(|i| (1..=n).map(|j| reduce(i + j) - 1).collect()).collect();
            finish(table, spec)
        }
        FamilySpec::Symmetric(n) => {
            if *n < 1 || *n > 5 {
                return Err(out_of_range(spec, "degree must be in 1..=5"));
            }
            finish(composition_table(&permutations_lex(*n)), spec)
        }
        FamilySpec::Quaternion8 => finish(quaternion_table(), spec),
        FamilySpec::FullTransformation(n) => {
            if *n < 1 || *n > 4 {
                return Err(out_of_range(spec, "degree must be in 1..=4"));
            }
            finish(composition_table(&all_maps(*n)), spec)
        }
        FamilySpec::Product(sa, sb) => {
            let ma = generate(sa)?;
            let mb = generate(sb)?;
            let (na, nb) = (ma.size(), mb.size());
            if na * nb > crate::magma::MAX_MAGMA_SIZE {
                return Err(out_of_range(spec, format!("product size {} exceeds 1024", na * nb)));
            }
            let table = (0..na * nb)
                .map(|x| {
                    let (xa, xb) = (x / nb, x % nb);
                    (0..na * nb)
                        .map(|y| {
                            let (ya, yb) = (y / nb, y % nb);
                            ma.op(xa, ya) * nb + mb.op(xb, yb)
                        })
                        .collect()
                })
                .collect();
            finish(table, spec)
        }
        FamilySpec::FromFile(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| GenError::FileRead {
                path: path.display().to_string(),
                detail: e.to_string(),
            })?;
            let parsed = if path.extension().is_some_and(|e| e == "json") {
                crate::io::parse_magma_json(&text)
            } else {
                crate::io::parse_magma(&text)
            };
            let mut m = parsed.map_err(|source| GenError::FileParse {
                path: path.display().to_string(),
                source,
            })?;
            if m.metadata().is_none() {
                m.set_metadata(Some(spec.to_string()));
            }
            Ok(m)
        }
    }
}

/// Splits `args` on top-level commas (parentheses nest).
fn split_top_level(args: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in args.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&args[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&args[start..]);
    parts
}

/// Parses the spec grammar: `name` or `name(arg,...)` with nested specs
/// inside `product(...)` and a raw path inside `from_file(...)`.
pub fn parse_family_spec(input: &str) -> Result<FamilySpec, GenError> {
    let bad = |detail: &str| GenError::BadSpec { input: input.into(), detail: detail.into() };
    let s = input.trim();
    let (name, args) = match s.find('(') {
        None => (s, None),
        Some(open) => {
            if !s.ends_with(')') {
                return Err(bad("missing closing parenthesis"));
            }
            (&s[..open], Some(&s[open + 1..s.len() - 1]))
        }
    };
    let name = name.trim().to_ascii_lowercase();
    let unsigned = |part: &str| -> Result<usize, GenError> {
        part.trim().parse().map_err(|_| bad("expected a non-negative integer argument"))
    };
    let one_arg = || args.ok_or_else(|| bad("expected one argument"));
    match name.as_str() {
        "cyclic" => Ok(FamilySpec::Cyclic(unsigned(one_arg()?)?)),
        "dihedral" => Ok(FamilySpec::Dihedral(unsigned(one_arg()?)?)),
        "symmetric" => Ok(FamilySpec::Symmetric(unsigned(one_arg()?)?)),
        "full_transformation" => Ok(FamilySpec::FullTransformation(unsigned(one_arg()?)?)),
        "monogenic" => {
            let parts = split_top_level(one_arg()?);
            if parts.len() != 2 {
                return Err(bad("monogenic takes two arguments: index,period"));
            }
            Ok(FamilySpec::Monogenic { index: unsigned(parts[0])?, period: unsigned(parts[1])? })
        }
        "quaternion8" => {
            if args.is_some_and(|a| !a.trim().is_empty()) {
                return Err(bad("quaternion8 takes no arguments"));
            }
            Ok(FamilySpec::Quaternion8)
        }
        "product" => {
            let parts = split_top_level(one_arg()?);
            if parts.len() != 2 {
                return Err(bad("product takes two specs"));
            }
            Ok(FamilySpec::Product(
                Box::new(parse_family_spec(parts[0])?),
                Box::new(parse_family_spec(parts[1])?),
            ))
        }
        "from_file" => Ok(FamilySpec::FromFile(PathBuf::from(one_arg()?.trim()))),
        _ => Err(bad("unknown family name")),
    }
}

fn random_factor(rng: &mut ChaCha8Rng) -> FamilySpec {
    match rng.gen_range(0..5) {
        0 => FamilySpec::Cyclic(rng.gen_range(2..=16)),
        1 => FamilySpec::Dihedral(rng.gen_range(3..=8)),
        2 => FamilySpec::Monogenic {
            index: rng.gen_range(1..=4),
            period: rng.gen_range(1..=4),
        },
        3 => FamilySpec::Symmetric(3),
        _ => FamilySpec::Quaternion8,
    }
}

/// The default verification corpus: every cyclic group up to order 64, the
/// dihedral groups D_3..D_16, all monogenic semigroups with index and
/// period up to 8, S_3 and S_4, the quaternion group, the full
/// transformation monoids on 2..4 points, and ten seeded pseudo-random
/// direct products capped at 256 elements.
pub fn default_corpus() -> Vec<FamilySpec> {
    let mut corpus = Vec::new();
    corpus.extend((1..=64).map(FamilySpec::Cyclic));
    corpus.extend((3..=16).map(FamilySpec::Dihedral));
    for index in 1..=8 {
        for period in 1..=8 {
            corpus.push(FamilySpec::Monogenic { index, period });
        }
    }
    corpus.extend([FamilySpec::Symmetric(3), FamilySpec::Symmetric(4)]);
    corpus.push(FamilySpec::Quaternion8);
    corpus.extend((2..=4).map(FamilySpec::FullTransformation));
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_PRODUCT_SEED);
    let mut products = 0;
    while products < 10 {
        let a = random_factor(&mut rng);
        let b = random_factor(&mut rng);
        let size = a.size().unwrap() * b.size().unwrap();
        if size <= 256 {
            corpus.push(FamilySpec::Product(Box::new(a), Box::new(b)));
            products += 1;
        }
    }
    corpus
}
