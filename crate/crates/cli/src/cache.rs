//! Certificate cache keyed by entry, tool version and root-order
//! fingerprint. Corrupt files are ignored and rewritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use relroots::CatalogEntry;
use sha2::{Digest, Sha256};

use crate::certfile::{CertificateFile, TOOL_VERSION};

pub const CACHE_ENV: &str = "RELROOTS_CACHE_DIR";

pub fn default_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("relroots"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("relroots"))
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, entry: &CatalogEntry, fingerprint: &str) -> PathBuf {
        let key = serde_json::to_vec(&(entry, TOOL_VERSION, fingerprint)).expect("keys serialize");
        self.dir.join(format!("{}.json", hex::encode(Sha256::digest(&key))))
    }

    /// A cached file whose digest, entry and fingerprint all match.
    pub fn load(&self, entry: &CatalogEntry, fingerprint: &str) -> Option<CertificateFile> {
        let text = fs::read_to_string(self.path(entry, fingerprint)).ok()?;
        let file = CertificateFile::parse(&text).ok()?;
        let h = &file.header;
        (h.entry == *entry && h.fingerprint == fingerprint && h.tool_version == TOOL_VERSION).then_some(file)
    }

    /// Writes atomically through a temporary file in the cache directory.
    pub fn store(&self, file: &CertificateFile) -> anyhow::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(file.to_json().as_bytes())?;
        tmp.persist(self.path(&file.header.entry, &file.header.fingerprint))?;
        Ok(())
    }
}
