//! Reading arrangements, presentations and character lists.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;

use arrangement_core::arrgeo::{builtin, Arrangement, ArrangementFile};
use arrangement_core::pi1cover::{Character, GroupPresentation};

/// Where the arrangement comes from.
#[derive(Clone, Debug)]
pub enum Source {
    Builtin(String),
    File(std::path::PathBuf),
}

fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {what} file {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| {
        anyhow!(
            "{}:{}:{}: invalid {what}: {e}",
            path.display(),
            e.line(),
            e.column()
        )
    })
}

pub fn load_arrangement(source: &Source) -> Result<Arrangement> {
    match source {
        Source::Builtin(name) => Ok(builtin(name)?),
        Source::File(path) => {
            let file: ArrangementFile = read_json(path, "arrangement")?;
            file.into_arrangement()
                .with_context(|| format!("{}: arrangement rejected", path.display()))
        }
    }
}

/// An external presentation; its meridians must label all `d` lines.
pub fn load_presentation(path: &Path, d: usize) -> Result<GroupPresentation> {
    let pres: GroupPresentation = read_json(path, "presentation")?;
    pres.validate()
        .with_context(|| format!("{}: presentation rejected", path.display()))?;
    if pres.meridians.len() != d {
        bail!(
            "{}: presentation has {} meridians but the arrangement has {d} lines",
            path.display(),
            pres.meridians.len()
        );
    }
    Ok(pres)
}

/// A JSON array of `{"order", "exponents"}` characters on `d` lines.
pub fn load_characters(path: &Path, d: usize) -> Result<Vec<Character>> {
    let chars: Vec<Character> = read_json(path, "character list")?;
    for (i, c) in chars.iter().enumerate() {
        if c.d() != d {
            bail!(
                "{}: character {i} has {} exponents, expected {d}",
                path.display(),
                c.d()
            );
        }
        if !c.product_is_one() {
            bail!(
                "{}: character {i} does not satisfy the product condition",
                path.display()
            );
        }
    }
    Ok(chars)
}
