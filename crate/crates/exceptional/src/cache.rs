//! On-disk cache of structure constants. One versioned JSON document per
//! subalgebra: label, dimension, basis (descriptor plus ambient coordinates)
//! and the sparse triples (i, j, k, "p/q + r/s i") with i < j.

use std::path::{Path, PathBuf};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::{Ambient, LieAlgebra, Subalgebra};
use crate::linalg::SVec;
use crate::scalar::Complex;

pub const FORMAT_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "EXCEPTIONAL_CACHE_DIR";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed cache document: {msg}")]
    Malformed { path: PathBuf, msg: String },
    #[error("{path}: cache does not match the requested algebra ({msg})")]
    Mismatch { path: PathBuf, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub descriptor: String,
    pub coords: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureDoc {
    pub version: u32,
    pub label: String,
    pub dimension: usize,
    pub ambient_dimension: usize,
    pub basis: Vec<BasisEntry>,
    pub triples: Vec<(usize, usize, usize, String)>,
}

static DIR: RwLock<Option<Option<PathBuf>>> = RwLock::new(None);

/// Sets the cache directory; `None` disables the cache.
pub fn set_dir(dir: Option<PathBuf>) {
    *DIR.write().unwrap() = Some(dir);
}

/// The configured directory, falling back to the environment variable.
pub fn dir() -> Option<PathBuf> {
    if let Some(d) = DIR.read().unwrap().clone() {
        return d;
    }
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

pub fn file_name(label: &str) -> String {
    let clean: String = label.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    format!("{clean}.json")
}

fn encode_svec(v: &SVec) -> Vec<(usize, String)> {
    v.iter().map(|(i, a)| (*i, a.to_string())).collect()
}

fn decode_svec(entries: &[(usize, String)]) -> Result<SVec, String> {
    let pairs = entries
        .iter()
        .map(|(i, s)| s.parse::<Complex>().map(|a| (*i, a)).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SVec::from_pairs(pairs))
}

pub fn to_doc<A: Ambient>(sub: &Subalgebra<A>) -> StructureDoc {
    let descriptors = sub.descriptors();
    StructureDoc {
        version: FORMAT_VERSION,
        label: sub.label().to_string(),
        dimension: sub.dim(),
        ambient_dimension: sub.amb.dim(),
        basis: sub
            .basis
            .iter()
            .zip(descriptors)
            .map(|(v, descriptor)| BasisEntry { descriptor, coords: encode_svec(v) })
            .collect(),
        triples: sub.lie.triples().into_iter().map(|(i, j, k, a)| (i, j, k, a.to_string())).collect(),
    }
}

/// Rebuilds the structure constants stored in `doc`, after checking that the
/// document describes `basis` in the ambient algebra `amb`.
pub fn from_doc<'a, A: Ambient>(
    amb: &'a A,
    label: &str,
    basis: &[SVec],
    doc: &StructureDoc,
    path: &Path,
) -> Result<Subalgebra<'a, A>, CacheError> {
    let mismatch = |msg: String| CacheError::Mismatch { path: path.to_path_buf(), msg };
    let malformed = |msg: String| CacheError::Malformed { path: path.to_path_buf(), msg };
    if doc.version != FORMAT_VERSION {
        return Err(mismatch(format!("version {}", doc.version)));
    }
    if doc.label != label || doc.dimension != basis.len() || doc.ambient_dimension != amb.dim() {
        return Err(mismatch(format!("{} of dimension {}", doc.label, doc.dimension)));
    }
    for (k, (entry, v)) in doc.basis.iter().zip(basis).enumerate() {
        if decode_svec(&entry.coords).map_err(&malformed)? != *v {
            return Err(mismatch(format!("basis element {k} differs")));
        }
    }
    let n = basis.len();
    let mut upper = vec![Vec::new(); n * n.saturating_sub(1) / 2];
    let slot = |i: usize, j: usize| i * n - i * (i + 1) / 2 + (j - i - 1);
    for (i, j, k, s) in &doc.triples {
        if !(i < j && *j < n && *k < n) {
            return Err(malformed(format!("triple index ({i}, {j}, {k})")));
        }
        let a: Complex = s.parse().map_err(|e: crate::scalar::ScalarError| malformed(e.to_string()))?;
        upper[slot(*i, *j)].push((*k, a));
    }
    let upper = upper.into_iter().map(SVec::from_pairs).collect();
    let lie = LieAlgebra::from_upper(label, n, upper);
    Subalgebra::from_parts(amb, basis.to_vec(), lie).map_err(|e| malformed(e.to_string()))
}

pub fn read_doc(path: &Path) -> Result<StructureDoc, CacheError> {
    let text = std::fs::read_to_string(path).map_err(|source| CacheError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|e| CacheError::Malformed { path: path.to_path_buf(), msg: e.to_string() })
}

pub fn write_doc(path: &Path, doc: &StructureDoc) -> Result<(), CacheError> {
    let io = |source| CacheError::Io { path: path.to_path_buf(), source };
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(io)?;
    }
    let text = serde_json::to_string(doc).expect("serializable");
    std::fs::write(path, text).map_err(|source| CacheError::Io { path: path.to_path_buf(), source })
}

/// Loads a cached subalgebra; a stale or corrupt file is reported and ignored.
pub fn load<'a, A: Ambient>(amb: &'a A, label: &str, basis: &[SVec]) -> Option<Subalgebra<'a, A>> {
    let path = dir()?.join(file_name(label));
    if !path.exists() {
        return None;
    }
    match read_doc(&path).and_then(|doc| from_doc(amb, label, basis, &doc, &path)) {
        Ok(sub) => Some(sub),
        Err(e) => {
            eprintln!("warning: rebuilding {label}: {e}");
            None
        }
    }
}

pub fn store<A: Ambient>(sub: &Subalgebra<A>) {
    let Some(d) = dir() else { return };
    let path = d.join(file_name(sub.label()));
    if let Err(e) = write_doc(&path, &to_doc(sub)) {
        eprintln!("warning: could not write cache: {e}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::f4_h;

    fn temp_path(name: &str) -> PathBuf {
        std::env::temp_dir().join(format!("exceptional-cache-test-{}-{name}", std::process::id()))
    }

    #[test]
    fn file_names_are_sanitized() {
        assert_eq!(file_name("e8^eps"), "e8_eps.json");
    }

    #[test]
    fn documents_round_trip_through_disk() {
        let sub = f4_h();
        let doc = to_doc(sub);
        let path = temp_path("f4H.json");
        write_doc(&path, &doc).unwrap();
        let back = read_doc(&path).unwrap();
        std::fs::remove_file(&path).unwrap();
        assert_eq!(back, doc);
        let rebuilt = from_doc(sub.amb, sub.label(), &sub.basis, &back, &path).unwrap();
        assert_eq!(rebuilt.lie, sub.lie);
        assert_eq!(to_doc(&rebuilt), doc);
    }

    #[test]
    fn stale_and_corrupt_documents_are_rejected() {
        let sub = f4_h();
        let path = Path::new("mem");
        let mut doc = to_doc(sub);
        doc.label = "other".into();
        assert!(matches!(from_doc(sub.amb, sub.label(), &sub.basis, &doc, path), Err(CacheError::Mismatch { .. })));
        let mut doc = to_doc(sub);
        doc.triples[0].3 = "one half".into();
        assert!(matches!(from_doc(sub.amb, sub.label(), &sub.basis, &doc, path), Err(CacheError::Malformed { .. })));
        let mut doc = to_doc(sub);
        doc.triples[0].0 = 99;
        assert!(matches!(from_doc(sub.amb, sub.label(), &sub.basis, &doc, path), Err(CacheError::Malformed { .. })));
        let bad = temp_path("bad.json");
        std::fs::write(&bad, "{").unwrap();
        assert!(matches!(read_doc(&bad), Err(CacheError::Malformed { .. })));
        std::fs::remove_file(&bad).unwrap();
    }
}
