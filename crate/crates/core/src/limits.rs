//! Runtime limits for the exact searches and window enumeration, with
//! environment-variable overrides.

/// Default vertex cap for the exact chromatic search.
pub const DEFAULT_CHI_LIMIT: usize = 64;
/// Default vertex cap for the exact maximum-clique search.
pub const DEFAULT_CLIQUE_LIMIT: usize = 256;
/// Default cap on the number of elements a symbolic window may enumerate.
pub const DEFAULT_WINDOW_ELEMENT_LIMIT: usize = 200_000;

fn env_limit(var: &str, default: usize) -> usize {
    match std::env::var(var) {
        Ok(v) => v.parse().unwrap_or(default),
        Err(_) => default,
    }
}

/// Vertex cap for exact chromatic search; override with
/// `POWERGRAPH_CHI_LIMIT`.
pub fn chi_limit() -> usize {
    env_limit("POWERGRAPH_CHI_LIMIT", DEFAULT_CHI_LIMIT)
}

/// Vertex cap for exact clique search; override with
/// `POWERGRAPH_CLIQUE_LIMIT`.
pub fn clique_limit() -> usize {
    env_limit("POWERGRAPH_CLIQUE_LIMIT", DEFAULT_CLIQUE_LIMIT)
}

/// Cap on enumerated window elements; override with
/// `POWERGRAPH_WINDOW_LIMIT`.
pub fn window_element_limit() -> usize {
    env_limit("POWERGRAPH_WINDOW_LIMIT", DEFAULT_WINDOW_ELEMENT_LIMIT)
}
