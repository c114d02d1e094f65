//! Strategy import/export as JSON.
//!
//! Schema (version 1): complex entries are "re,im" strings, matrices are
//! row-major flattened, and the per-question POVM maps are keyed by a
//! canonical question encoding — the subspace's RREF basis rows as
//! fixed-width lowercase hex joined by commas for the coset game, the θ
//! bitstring for the basis game. Parsing is total: malformed input is an
//! error, never a panic.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::povm::Povm;
use super::strategy::{basis_questions, coset_questions, EnlgStrategy, Game};
use crate::f2::{F2Matrix, F2Vector, Subspace};
use crate::qstate::CMat;
use crate::{Error, Result};

/// Upper bound on the composite dimension accepted from external input.
const MAX_TOTAL_DIM: usize = 4096;

#[derive(Serialize, Deserialize)]
struct StrategyJson {
    schema: u32,
    game: String,
    n: usize,
    dim_b: usize,
    dim_c: usize,
    rho: Vec<String>,
    bob: BTreeMap<String, Vec<Vec<String>>>,
    charlie: BTreeMap<String, Vec<Vec<String>>>,
}

/// Hex width for one basis row of F₂ⁿ.
fn hex_width(n: usize) -> usize {
    n.div_ceil(4)
}

/// Canonical key of a coset-game question: RREF rows as fixed-width hex.
pub fn encode_subspace_key(a: &Subspace) -> String {
    let w = hex_width(a.ambient());
    a.basis()
        .rows()
        .iter()
        .map(|r| format!("{:0w$x}", r.index()))
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse a subspace key; the rows must form the canonical RREF basis of a
/// half-dimension subspace of F₂ⁿ.
pub fn decode_subspace_key(n: usize, key: &str) -> Result<Subspace> {
    if n == 0 || n > 24 {
        return Err(Error::parse(format!("invalid ambient dimension {n}")));
    }
    let mut rows = Vec::new();
    for part in key.split(',') {
        let bits = u32::from_str_radix(part, 16)
            .map_err(|e| Error::parse(format!("bad hex row {part:?}: {e}")))?;
        if bits as usize >= 1usize << n {
            return Err(Error::parse(format!("row {part:?} out of range for n={n}")));
        }
        rows.push(F2Vector::from_index(n, bits as usize));
    }
    let m = F2Matrix::new(n, rows)?;
    if !m.is_canonical_rref() {
        return Err(Error::parse(format!("key {key:?} is not a canonical RREF basis")));
    }
    Ok(Subspace::from_span(&m))
}

/// Canonical key of a basis-game question.
pub fn encode_theta_key(theta: &F2Vector) -> String {
    theta.to_string()
}

/// Parse a θ key: a bitstring of length n and weight n/2.
pub fn decode_theta_key(n: usize, key: &str) -> Result<F2Vector> {
    let theta: F2Vector = key.parse()?;
    if theta.len() != n {
        return Err(Error::parse(format!("θ length {} does not match n={n}", theta.len())));
    }
    if theta.weight() != n / 2 {
        return Err(Error::parse(format!("θ weight {} is not n/2", theta.weight())));
    }
    Ok(theta)
}

/// Parse one "re,im" complex entry.
pub fn decode_complex(s: &str) -> Result<Complex64> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| Error::parse(format!("complex entry {s:?} lacks a comma")))?;
    let re: f64 = re.trim().parse().map_err(|e| Error::parse(format!("bad real part: {e}")))?;
    let im: f64 = im.trim().parse().map_err(|e| Error::parse(format!("bad imag part: {e}")))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(Error::parse(format!("non-finite complex entry {s:?}")));
    }
    Ok(Complex64::new(re, im))
}

fn encode_complex(z: Complex64) -> String {
    format!("{},{}", z.re, z.im)
}

fn encode_matrix(m: &CMat) -> Vec<String> {
    let mut out = Vec::with_capacity(m.nrows() * m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            out.push(encode_complex(m[(i, j)]));
        }
    }
    out
}

fn decode_matrix(entries: &[String], dim: usize) -> Result<CMat> {
    if entries.len() != dim * dim {
        return Err(Error::parse(format!(
            "matrix has {} entries, expected {}",
            entries.len(),
            dim * dim
        )));
    }
    let mut m = CMat::zeros(dim, dim);
    for (idx, e) in entries.iter().enumerate() {
        m[(idx / dim, idx % dim)] = decode_complex(e)?;
    }
    Ok(m)
}

/// Serialize a strategy; deterministic byte output for identical input.
pub fn strategy_to_json(s: &EnlgStrategy) -> Result<String> {
    let keys: Vec<String> = match s.game {
        Game::Coset => coset_questions(s.n)?.iter().map(encode_subspace_key).collect(),
        Game::Basis => basis_questions(s.n)?.iter().map(encode_theta_key).collect(),
    };
    if keys.len() != s.bob.len() || keys.len() != s.charlie.len() {
        return Err(Error::InvalidStrategy(format!(
            "strategy has {}/{} POVMs for {} questions",
            s.bob.len(),
            s.charlie.len(),
            keys.len()
        )));
    }
    let encode_povms = |povms: &[Povm]| -> BTreeMap<String, Vec<Vec<String>>> {
        keys.iter()
            .cloned()
            .zip(povms.iter().map(|p| p.elements.iter().map(encode_matrix).collect()))
            .collect()
    };
    let doc = StrategyJson {
        schema: 1,
        game: s.game.to_string(),
        n: s.n,
        dim_b: s.d_b,
        dim_c: s.d_c,
        rho: encode_matrix(&s.rho),
        bob: encode_povms(&s.bob),
        charlie: encode_povms(&s.charlie),
    };
    serde_json::to_string(&doc).map_err(|e| Error::parse(e.to_string()))
}

/// Parse and structurally validate a strategy. Mathematical invariants
/// (PSD, completeness, unit trace) are the caller's next step via
/// [`EnlgStrategy::validate`].
pub fn strategy_from_json(text: &str) -> Result<EnlgStrategy> {
    let doc: StrategyJson = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
    if doc.schema != 1 {
        return Err(Error::parse(format!("unsupported schema version {}", doc.schema)));
    }
    let game = match doc.game.as_str() {
        "coset" => Game::Coset,
        "basis" => Game::Basis,
        other => return Err(Error::parse(format!("unknown game {other:?}"))),
    };
    if doc.n < 2 || !doc.n.is_multiple_of(2) || doc.n > 8 {
        return Err(Error::parse(format!("n={} out of supported range", doc.n)));
    }
    if doc.dim_b == 0 || doc.dim_c == 0 {
        return Err(Error::parse("player dimensions must be positive"));
    }
    let dim = (1usize << doc.n)
        .checked_mul(doc.dim_b)
        .and_then(|d| d.checked_mul(doc.dim_c))
        .ok_or_else(|| Error::parse("dimension overflow"))?;
    if dim > MAX_TOTAL_DIM {
        return Err(Error::parse(format!("total dimension {dim} exceeds {MAX_TOTAL_DIM}")));
    }

    let expected_keys: Vec<String> = match game {
        Game::Coset => coset_questions(doc.n)?.iter().map(encode_subspace_key).collect(),
        Game::Basis => basis_questions(doc.n)?.iter().map(encode_theta_key).collect(),
    };
    let outcomes = 1usize << (doc.n / 2);

    let decode_povms = |map: &BTreeMap<String, Vec<Vec<String>>>,
                        d: usize,
                        who: &str|
     -> Result<Vec<Povm>> {
        if map.len() != expected_keys.len() {
            return Err(Error::parse(format!(
                "{who} has {} questions, expected {}",
                map.len(),
                expected_keys.len()
            )));
        }
        expected_keys
            .iter()
            .map(|key| {
                // Also exercises the key decoders on every provided key.
                match game {
                    Game::Coset => {
                        decode_subspace_key(doc.n, key)?;
                    }
                    Game::Basis => {
                        decode_theta_key(doc.n, key)?;
                    }
                }
                let mats = map.get(key).ok_or_else(|| {
                    Error::parse(format!("{who} is missing question key {key:?}"))
                })?;
                if mats.len() != outcomes {
                    return Err(Error::parse(format!(
                        "{who} question {key:?} has {} outcomes, expected {outcomes}",
                        mats.len()
                    )));
                }
                let elements =
                    mats.iter().map(|m| decode_matrix(m, d)).collect::<Result<Vec<_>>>()?;
                Ok(Povm { elements })
            })
            .collect()
    };

    let bob = decode_povms(&doc.bob, doc.dim_b, "bob")?;
    let charlie = decode_povms(&doc.charlie, doc.dim_c, "charlie")?;
    let rho = decode_matrix(&doc.rho, dim)?;

    Ok(EnlgStrategy {
        game,
        n: doc.n,
        d_b: doc.dim_b,
        d_c: doc.dim_c,
        rho,
        bob,
        charlie,
    })
}

/// FNV-1a digest of a strategy's canonical JSON, as stable short id.
pub fn strategy_digest(s: &EnlgStrategy) -> Result<String> {
    let json = strategy_to_json(s)?;
    let mut hash: u64 = 0xcbf29ce484222325;
    for b in json.as_bytes() {
        hash ^= u64::from(*b);
        hash = hash.wrapping_mul(0x100000001b3);
    }
    Ok(format!("{hash:016x}"))
}
