use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Resource limits for face enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of faces kept in any single dimension.
    pub faces_per_dim: usize,
    /// Maximum number of sets visited while searching for facets.
    pub facet_search: usize,
}

impl Budget {
    pub const DEFAULT_FACES_PER_DIM: usize = 4_000_000;

    pub fn with_faces(faces_per_dim: usize) -> Self {
        Self {
            faces_per_dim,
            ..Self::default()
        }
    }

    pub fn unlimited() -> Self {
        Self {
            faces_per_dim: usize::MAX,
            facet_search: usize::MAX,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            faces_per_dim: Self::DEFAULT_FACES_PER_DIM,
            facet_search: 50_000_000,
        }
    }
}

/// Faces of a complex in a contiguous window of dimensions, each slice in
/// lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceSlices {
    lo: i32,
    slices: Vec<Vec<VertexSet>>,
}

impl FaceSlices {
    pub(crate) fn new(lo: i32, hi: i32) -> Self {
        let len = (hi - lo + 1).max(0) as usize;
        Self {
            lo,
            slices: vec![Vec::new(); len],
        }
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.slices.len() as i32 - 1
    }

    /// Faces of dimension `q`; empty outside the window.
    pub fn dim(&self, q: i32) -> &[VertexSet] {
        if q < self.lo {
            return &[];
        }
        self.slices
            .get((q - self.lo) as usize)
            .map_or(&[], Vec::as_slice)
    }

    pub(crate) fn slot(&mut self, size: usize) -> Option<&mut Vec<VertexSet>> {
        let idx = size as i32 - 1 - self.lo;
        if idx < 0 {
            return None;
        }
        self.slices.get_mut(idx as usize)
    }

    /// Appends every slice of `other` (same window) after this one's.
    pub(crate) fn append(&mut self, other: FaceSlices) {
        debug_assert_eq!((self.lo, self.slices.len()), (other.lo, other.slices.len()));
        for (mine, theirs) in self.slices.iter_mut().zip(other.slices) {
            mine.extend(theirs);
        }
    }

    pub(crate) fn record(&mut self, face: &VertexSet, counter: &FaceCounter) -> Result<()> {
        if let Some(slot) = self.slot(face.len()) {
            counter.bump(face.len())?;
            slot.push(face.clone());
        }
        Ok(())
    }
}

/// Shared per-dimension counter enforcing [`Budget::faces_per_dim`] across
/// parallel workers.
pub(crate) struct FaceCounter {
    counts: Vec<AtomicUsize>,
    limit: usize,
}

impl FaceCounter {
    pub(crate) fn new(max_size: usize, limit: usize) -> Self {
        Self {
            counts: (0..=max_size).map(|_| AtomicUsize::new(0)).collect(),
            limit,
        }
    }

    fn bump(&self, size: usize) -> Result<()> {
        let count = self.counts[size].fetch_add(1, Ordering::Relaxed) + 1;
        if count > self.limit {
            return Err(Error::Capacity {
                what: "faces in one dimension",
                count,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// Lexicographic depth-first enumeration of the faces generated by
/// `facets`, restricted to sizes `lo+1..=hi+1`.
pub(crate) fn faces_from_facets(
    ground: usize,
    facets: &[VertexSet],
    lo: i32,
    hi: i32,
    budget: &Budget,
) -> Result<FaceSlices> {
    let mut out = FaceSlices::new(lo, hi);
    if facets.is_empty() || hi < -1 {
        return Ok(out);
    }
    let max_size = (hi + 1) as usize;
    let counter = FaceCounter::new(max_size.min(ground) + 1, budget.faces_per_dim);
    let all: Vec<usize> = (0..facets.len()).collect();
    let mut current = VertexSet::new();
    walk(facets, &all, &mut current, 0, max_size, &mut out, &counter)?;
    Ok(out)
}

fn walk(
    facets: &[VertexSet],
    live: &[usize],
    current: &mut VertexSet,
    start: usize,
    max_size: usize,
    out: &mut FaceSlices,
    counter: &FaceCounter,
) -> Result<()> {
    out.record(current, counter)?;
    if current.len() == max_size {
        return Ok(());
    }
    let mut reach = VertexSet::new();
    for &f in live {
        reach = reach.union(&facets[f]);
    }
    for v in reach.iter().filter(|&v| v >= start) {
        let next: Vec<usize> = live
            .iter()
            .copied()
            .filter(|&f| facets[f].contains(v))
            .collect();
        current.insert(v);
        walk(facets, &next, current, v + 1, max_size, out, counter)?;
        current.remove(v);
    }
    Ok(())
}

/// Keeps the inclusion-maximal sets, deduplicated and sorted.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Keeps the inclusion-minimal sets, deduplicated and sorted.
pub(crate) fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}
