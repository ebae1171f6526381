//! On-disk certificates: a header, the certificate, and a SHA-256 digest
//! over both.

use anyhow::{bail, Context};
use relroots::{CatalogEntry, RelativeRootSystem, StrongGradingCertificate};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub tool_version: String,
    pub entry: CatalogEntry,
    /// Digest of the ambient and relative roots in canonical order.
    pub fingerprint: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub header: Header,
    pub body: StrongGradingCertificate,
    pub digest: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Identifies the canonical root orders a certificate was written against.
pub fn fingerprint(rel: &RelativeRootSystem) -> String {
    let ambient: Vec<&[i64]> = rel.ambient().roots().iter().map(|r| r.coords()).collect();
    let relative: Vec<&[i64]> = rel.roots().iter().map(|r| r.coords()).collect();
    let bytes = serde_json::to_vec(&(ambient, relative)).expect("roots serialize");
    sha256_hex(&bytes)
}

fn digest_of(header: &Header, body: &StrongGradingCertificate) -> String {
    let bytes = serde_json::to_vec(&(header, body)).expect("certificates serialize");
    sha256_hex(&bytes)
}

impl CertificateFile {
    pub fn new(entry: CatalogEntry, rel: &RelativeRootSystem, body: StrongGradingCertificate) -> Self {
        let header = Header { tool_version: TOOL_VERSION.to_string(), entry, fingerprint: fingerprint(rel) };
        let digest = digest_of(&header, &body);
        CertificateFile { header, body, digest }
    }

    pub fn digest_ok(&self) -> bool {
        self.digest == digest_of(&self.header, &self.body)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    /// Parses and checks the digest; mathematical checks are separate.
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let file: CertificateFile = serde_json::from_str(text).context("malformed certificate file")?;
        if !file.digest_ok() {
            bail!("digest mismatch");
        }
        Ok(file)
    }
}
