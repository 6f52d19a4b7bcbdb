//! Resolving command-line input arguments: files or `builtin:` names.

use std::fs;

use scx_core::formats::{parse_complex, parse_matroid, parse_partition};
use scx_core::matroid::{Builtin, Matroid};
use scx_core::{named, Complex, Error, Partition, Result, VertexSet};

use crate::report::digest_bytes;

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))
}

/// A loaded input with the digest of the text or name it came from.
pub struct Loaded<T> {
    pub value: T,
    pub digest: String,
}

/// `builtin:NAME` (see `named::by_name`) or a complex JSON file.
pub fn load_complex(arg: &str) -> Result<Loaded<Complex>> {
    let (value, source) = match arg.strip_prefix("builtin:") {
        Some(name) => (named::by_name(name)?, arg.to_string()),
        None => {
            let text = read(arg)?;
            (parse_complex(&text)?, text)
        }
    };
    Ok(Loaded { value, digest: digest_bytes(source.as_bytes()) })
}

/// `builtin:AG23`, `builtin:PG33`, `uniform:R,N` or a matroid JSON file.
pub fn load_matroid(arg: &str) -> Result<Loaded<Matroid>> {
    let value = if let Some(name) = arg.strip_prefix("builtin:") {
        match name.to_ascii_uppercase().as_str() {
            "AG23" => Matroid::builtin(Builtin::Ag23),
            "PG33" => Matroid::builtin(Builtin::Pg33),
            _ => return Err(Error::InvalidInput(format!("unknown builtin matroid {name:?}"))),
        }
    } else if let Some(rest) = arg.strip_prefix("uniform:") {
        let nums: Vec<usize> = rest
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::InvalidInput(format!("bad uniform spec {rest:?}"))))
            .collect::<Result<_>>()?;
        match nums.as_slice() {
            [r, n] => Matroid::uniform(*r, *n)?,
            _ => return Err(Error::InvalidInput(format!("expected uniform:RANK,N, got {arg:?}"))),
        }
    } else {
        return read(arg).and_then(|text| {
            Ok(Loaded { value: parse_matroid(&text)?, digest: digest_bytes(text.as_bytes()) })
        });
    };
    Ok(Loaded { value, digest: digest_bytes(arg.as_bytes()) })
}

/// The three lines `x = 0, 1, 2` of the affine plane, a parallel class.
pub fn three_parallel_lines() -> Partition {
    Partition::new(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).expect("disjoint classes")
}

/// `3-parallel-lines`, `singletons:N` or a partition JSON file.
pub fn load_partition(arg: &str) -> Result<Partition> {
    if arg == "3-parallel-lines" {
        return Ok(three_parallel_lines());
    }
    if let Some(n) = arg.strip_prefix("singletons:") {
        let n: usize = n.parse().map_err(|_| Error::InvalidInput(format!("bad partition spec {arg:?}")))?;
        return Partition::new(&(0..n).map(|v| vec![v]).collect::<Vec<_>>());
    }
    parse_partition(&read(arg)?)
}

/// `all`, a comma-separated vertex list, or a JSON array file.
pub fn load_subset(arg: Option<&str>, ground: VertexSet) -> Result<VertexSet> {
    let Some(arg) = arg.filter(|a| *a != "all") else {
        return Ok(ground);
    };
    let list: Vec<usize> = if arg.chars().all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace()) {
        arg.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse().map_err(|_| Error::InvalidInput(format!("bad vertex {t:?}"))))
            .collect::<Result<_>>()?
    } else {
        serde_json::from_str(&read(arg)?).map_err(|e| Error::InvalidInput(format!("subset JSON: {e}")))?
    };
    let s = VertexSet::from_vertices(list.iter().copied());
    if let Some(&v) = list.iter().find(|&&v| !ground.contains(v)) {
        return Err(Error::VertexOutOfRange { vertex: v, n: ground.len() });
    }
    Ok(s)
}
