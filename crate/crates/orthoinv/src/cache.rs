//! Content-addressed cache of polynomial constructions.
//!
//! One file per construct, `<construct>-m<m>-q<q>.poly`. The first line is
//! `sha256 <hex>` over the rest of the file, which is a sequence of
//! polynomials in the ring text format. A digest mismatch or parse failure
//! is a miss, never an error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use orthoinv_core::relations::digest;
use orthoinv_core::ring::Poly;

use crate::HarnessError;

#[derive(Debug)]
pub struct Cache {
    dir: PathBuf,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self, HarnessError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| HarnessError::io(&dir, e))?;
        Ok(Cache { dir, hits: AtomicUsize::new(0), misses: AtomicUsize::new(0) })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, construct: &str, m: usize, q: u32) -> PathBuf {
        self.dir.join(format!("{construct}-m{m}-q{q}.poly"))
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    /// Writes atomically through a temporary file in the cache directory and
    /// returns the digest of the body.
    pub fn store(&self, construct: &str, m: usize, q: u32, polys: &[&Poly]) -> Result<String, HarnessError> {
        let body: String = polys.iter().map(|p| p.to_text()).collect();
        let sum = digest(&body);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| HarnessError::io(&self.dir, e))?;
        write!(tmp, "sha256 {sum}\n{body}").map_err(|e| HarnessError::io(tmp.path(), e))?;
        let target = self.path(construct, m, q);
        tmp.persist(&target).map_err(|e| HarnessError::io(&target, e.error))?;
        Ok(sum)
    }

    pub fn load(&self, construct: &str, m: usize, q: u32) -> Option<Vec<Poly>> {
        let found = self.read(&self.path(construct, m, q));
        let counter = if found.is_some() { &self.hits } else { &self.misses };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    fn read(&self, path: &Path) -> Option<Vec<Poly>> {
        let text = fs::read_to_string(path).ok()?;
        let (header, body) = text.split_once('\n')?;
        if header.strip_prefix("sha256 ")? != digest(body) {
            eprintln!("cache: digest mismatch in {}, rebuilding", path.display());
            return None;
        }
        split_polys(body).iter().map(|chunk| Poly::from_text(chunk).ok()).collect()
    }
}

/// Splits concatenated polynomial texts at their `ring` headers.
fn split_polys(body: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for line in body.lines() {
        if line.starts_with("ring ") || out.is_empty() {
            out.push(String::new());
        }
        let cur = out.last_mut().expect("nonempty");
        cur.push_str(line);
        cur.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use orthoinv_core::gf::Field;
    use orthoinv_core::ring::Ring;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let ring = Ring::orthogonal(1, Field::new(2).unwrap()).unwrap();
        let (a, b) = (ring.xi0(), Poly::zero(ring));
        cache.store("pair", 1, 4, &[&a, &b]).unwrap();
        assert_eq!(cache.load("pair", 1, 4).unwrap(), vec![a.clone(), b]);
        assert_eq!(cache.hits(), 1);

        let path = cache.path("pair", 1, 4);
        let text = fs::read_to_string(&path).unwrap().replace("\n1 ", "\n2 ");
        fs::write(&path, text).unwrap();
        assert!(cache.load("pair", 1, 4).is_none());
        assert!(cache.load("absent", 1, 4).is_none());
        assert_eq!(cache.misses(), 2);
    }
}
