//! On-disk lattice cache. One JSON file per arrangement, named by its
//! content hash. Loading re-validates every flat against the arrangement,
//! and writes go through a temporary file and a rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::lattice::{build_lattice_limited, Flat, IntersectionLattice};
use crate::linalg::{Row, Subspace};
use crate::support::Support;

pub const CACHE_FORMAT: &str = "hyperlat-lattice";
pub const CACHE_VERSION: u32 = 1;

type Coeffs = Vec<String>;

#[derive(Serialize, Deserialize)]
struct CachedFlat {
    support: Vec<usize>,
    forms: Vec<Vec<Coeffs>>,
}

#[derive(Serialize, Deserialize)]
struct CachedLattice {
    format: String,
    version: u32,
    hash: String,
    ambient: usize,
    order: u32,
    hyperplanes: Vec<Vec<Coeffs>>,
    levels: Vec<Vec<CachedFlat>>,
}

fn row_strings(row: &[Cyclo]) -> Vec<Coeffs> {
    row.iter().map(Cyclo::to_strings).collect()
}

fn row_from_strings(order: u32, row: &[Coeffs]) -> Result<Row> {
    row.iter().map(|c| Cyclo::from_strings(order, c)).collect::<Result<_>>().map_err(|e| Error::Cache(e.to_string()))
}

/// Serializes a lattice. Equal lattices give equal bytes.
pub fn encode(lattice: &IntersectionLattice) -> String {
    let arr = lattice.arrangement();
    let levels = (0..=lattice.rank())
        .map(|k| {
            lattice
                .level(k)
                .iter()
                .map(|f| CachedFlat {
                    support: f.support().to_vec(),
                    forms: f.subspace().forms().iter().map(|r| row_strings(r)).collect(),
                })
                .collect()
        })
        .collect();
    let doc = CachedLattice {
        format: CACHE_FORMAT.to_string(),
        version: CACHE_VERSION,
        hash: arr.content_hash(),
        ambient: arr.ambient(),
        order: arr.order(),
        hyperplanes: arr.hyperplanes().iter().map(|h| row_strings(h.coeffs())).collect(),
        levels,
    };
    let mut text = serde_json::to_string(&doc).expect("cache document serializes");
    text.push('\n');
    text
}

/// Parses a cache document for `arr`, rejecting anything that is not the
/// canonical lattice of exactly this arrangement.
pub fn decode(arr: &Arrangement, text: &str) -> Result<IntersectionLattice> {
    let bad = |msg: String| Error::Cache(msg);
    let doc: CachedLattice = serde_json::from_str(text).map_err(|e| bad(format!("malformed: {e}")))?;
    if doc.format != CACHE_FORMAT || doc.version != CACHE_VERSION {
        return Err(bad(format!("unsupported format {} v{}", doc.format, doc.version)));
    }
    if doc.hash != arr.content_hash() || doc.ambient != arr.ambient() || doc.order != arr.order() {
        return Err(bad("entry belongs to a different arrangement".into()));
    }
    let hyperplanes = arr.hyperplanes();
    if doc.hyperplanes.len() != hyperplanes.len() {
        return Err(bad("hyperplane count differs".into()));
    }
    for (stored, h) in doc.hyperplanes.iter().zip(hyperplanes) {
        if row_from_strings(arr.order(), stored)?.as_slice() != h.coeffs() {
            return Err(bad("hyperplane forms differ".into()));
        }
    }
    let mut levels = Vec::with_capacity(doc.levels.len());
    for (rank, level) in doc.levels.iter().enumerate() {
        let mut flats: Vec<Flat> = Vec::with_capacity(level.len());
        for cached in level {
            let rows = cached.forms.iter().map(|r| row_from_strings(arr.order(), r)).collect::<Result<Vec<_>>>()?;
            let subspace = Subspace::from_rows(arr.ambient(), arr.order(), rows.clone());
            if subspace.forms() != rows.as_slice() || subspace.codim() != rank {
                return Err(bad(format!("flat at rank {rank} is not in canonical form")));
            }
            let support = Support::from_indices(hyperplanes.len(), cached.support.iter().copied());
            let actual = Support::from_indices(
                hyperplanes.len(),
                hyperplanes.iter().enumerate().filter(|(_, h)| subspace.lies_in(h)).map(|(i, _)| i),
            );
            if support != actual {
                return Err(bad(format!("flat at rank {rank} has the wrong support")));
            }
            if flats.last().is_some_and(|prev| prev.support() >= &support) {
                return Err(bad(format!("rank {rank} is not sorted")));
            }
            flats.push(Flat::new(subspace, support));
        }
        levels.push(flats);
    }
    if levels.first().map(|l| l.len()) != Some(1) || levels.last().map(|l| l.len()) != Some(1) {
        return Err(bad("lattice must have a single bottom and top".into()));
    }
    Ok(IntersectionLattice::from_levels(arr.clone(), levels))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// An entry existed but failed validation and was rebuilt.
    Replaced,
}

#[derive(Clone, Debug)]
pub struct LatticeCache {
    dir: PathBuf,
}

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl LatticeCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        LatticeCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, arr: &Arrangement) -> PathBuf {
        self.dir.join(format!("{}.v{CACHE_VERSION}.json", arr.content_hash()))
    }

    /// `Ok(None)` when there is no entry; `Err` when an entry fails validation.
    pub fn load(&self, arr: &Arrangement) -> Result<Option<IntersectionLattice>> {
        let path = self.path_for(arr);
        match fs::read_to_string(&path) {
            Ok(text) => decode(arr, &text).map(Some),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::Cache(format!("{}: {e}", path.display()))),
        }
    }

    pub fn store(&self, lattice: &IntersectionLattice) -> Result<PathBuf> {
        let io = |e: std::io::Error| Error::Cache(e.to_string());
        fs::create_dir_all(&self.dir).map_err(io)?;
        let path = self.path_for(lattice.arrangement());
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            lattice.arrangement().content_hash(),
            std::process::id(),
            TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let mut file = fs::File::create(&tmp).map_err(io)?;
        file.write_all(encode(lattice).as_bytes()).map_err(io)?;
        file.sync_all().map_err(io)?;
        drop(file);
        fs::rename(&tmp, &path).map_err(|e| {
            let _ = fs::remove_file(&tmp);
            io(e)
        })?;
        Ok(path)
    }

    pub fn get_or_build(&self, arr: &Arrangement, max_flats: usize) -> Result<(IntersectionLattice, CacheStatus)> {
        let status = match self.load(arr) {
            Ok(Some(lattice)) => return Ok((lattice, CacheStatus::Hit)),
            Ok(None) => CacheStatus::Miss,
            Err(Error::Cache(_)) => CacheStatus::Replaced,
            Err(e) => return Err(e),
        };
        let lattice = build_lattice_limited(arr, max_flats)?;
        self.store(&lattice)?;
        Ok((lattice, status))
    }
}
