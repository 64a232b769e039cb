//! Seeded test corpora: T-polygons from a coordinate box plus random mutation
//! walks from the catalog representatives, and random `A_r` cycles in `E_8`.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tpoly_core::catalog::Catalog;
use tpoly_core::classify::{classify_polygon, ClassifyBounds, ClassifyError, Classification};
use tpoly_core::polygon::{t_polygon_classes_in_box, FanoPolygon};
use tpoly_core::rootlattice::{
    chain_extensions, classify_boundary, cycle_from_chain, embed_e8, en_roots, make_i1n, ClassLabel, LatticeVector,
};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x7e5_2024;

/// Largest number of lattice points allowed in a walk polygon.
pub const MAX_WALK_POINTS: usize = 150;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Normal form found in the coordinate box.
    Box,
    /// `steps` random mutations applied to the representative of `from_id`.
    Walk { from_id: u8, steps: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusItem {
    pub origin: Origin,
    pub polygon: FanoPolygon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub box_bound: i64,
    pub walks: usize,
    pub max_steps: usize,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { box_bound: 3, walks: 100, max_steps: 3, seed: DEFAULT_SEED }
    }
}

/// A random walk of up to `steps` admissible mutations, skipping images with
/// more than [`MAX_WALK_POINTS`] lattice points. Returns the polygon reached and
/// the number of steps taken.
pub fn random_walk(start: &FanoPolygon, steps: usize, rng: &mut impl Rng) -> (FanoPolygon, usize) {
    let mut p = start.clone();
    let mut taken = 0;
    for _ in 0..steps {
        let options: Vec<FanoPolygon> = p
            .admissible_mutations()
            .iter()
            .filter_map(|m| p.mutate(m).ok())
            .filter(|q| q.lattice_points().len() <= MAX_WALK_POINTS)
            .collect();
        match options.choose(rng) {
            Some(q) => {
                p = q.clone();
                taken += 1;
            }
            None => break,
        }
    }
    (p, taken)
}

pub fn build_corpus(catalog: &Catalog, spec: &CorpusSpec) -> Vec<CorpusItem> {
    let mut items: Vec<CorpusItem> = t_polygon_classes_in_box(spec.box_bound)
        .into_iter()
        .map(|polygon| CorpusItem { origin: Origin::Box, polygon })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let entries = catalog.entries();
    for i in 0..spec.walks {
        let entry = &entries[i % entries.len()];
        let steps = rng.random_range(1..=spec.max_steps.max(1));
        let (polygon, taken) = random_walk(&entry.polygon, steps, &mut rng);
        items.push(CorpusItem { origin: Origin::Walk { from_id: entry.id, steps: taken }, polygon });
    }
    items
}

#[derive(Clone, Debug)]
pub struct CorpusResult {
    pub item: CorpusItem,
    pub outcome: Result<Classification, ClassifyError>,
}

#[derive(Clone, Debug)]
pub struct Reproduction {
    pub results: Vec<CorpusResult>,
}

impl Reproduction {
    pub fn errors(&self) -> usize {
        self.results.iter().filter(|r| r.outcome.is_err()).count()
    }

    /// Number of corpus items per class id.
    pub fn class_sizes(&self) -> BTreeMap<u8, usize> {
        let mut out = BTreeMap::new();
        for r in &self.results {
            if let Ok(c) = &r.outcome {
                *out.entry(c.class_id).or_insert(0) += 1;
            }
        }
        out
    }

    /// Walks whose class differs from the class they started in.
    pub fn walk_mismatches(&self) -> usize {
        self.results
            .iter()
            .filter(|r| match (&r.item.origin, &r.outcome) {
                (Origin::Walk { from_id, .. }, Ok(c)) => c.class_id != *from_id,
                _ => false,
            })
            .count()
    }

    pub fn witnesses_found(&self) -> usize {
        self.results.iter().filter(|r| matches!(&r.outcome, Ok(c) if c.witness.is_some())).count()
    }

    /// Normal-vector indices seen per class id.
    pub fn normal_indices(&self) -> BTreeMap<u8, BTreeSet<i64>> {
        let mut out: BTreeMap<u8, BTreeSet<i64>> = BTreeMap::new();
        for r in &self.results {
            if let Ok(c) = &r.outcome {
                out.entry(c.class_id).or_default().insert(c.invariants.normal_index);
            }
        }
        out
    }
}

pub fn reproduce(catalog: &Catalog, corpus: Vec<CorpusItem>, bounds: &ClassifyBounds) -> Reproduction {
    let results = corpus
        .into_iter()
        .map(|item| {
            let outcome = classify_polygon(&item.polygon, catalog, bounds);
            CorpusResult { item, outcome }
        })
        .collect();
    Reproduction { results }
}

/// Classifies `samples` random anticanonical cycles built from `A_rank` chains
/// of `E_8` roots, returning how often each label occurred.
pub fn random_cycle_labels(rank: usize, samples: usize, seed: u64) -> BTreeMap<ClassLabel, usize> {
    let lattice = make_i1n(9);
    let roots: Vec<LatticeVector> = en_roots(8).expect("E8 roots").iter().map(embed_e8).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = BTreeMap::new();
    let mut done = 0;
    while done < samples {
        let mut chain: Vec<LatticeVector> = Vec::with_capacity(rank);
        while chain.len() < rank {
            let options: Vec<&LatticeVector> = chain_extensions(&lattice, &roots, &chain).collect();
            match options.choose(&mut rng) {
                Some(g) => chain.push((*g).clone()),
                None => break,
            }
        }
        if chain.len() < rank {
            continue;
        }
        let class = classify_boundary(&cycle_from_chain(&chain), &lattice).expect("chains give valid cycles");
        *counts.entry(class.label).or_insert(0) += 1;
        done += 1;
    }
    counts
}
