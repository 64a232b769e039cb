//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Run with `cargo test -p tpoly --test acceptance`.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tpoly::corpus::{build_corpus, random_cycle_labels, reproduce, CorpusSpec, DEFAULT_SEED};
use tpoly_core::catalog::{Catalog, Discrepancy};
use tpoly_core::classify::ClassifyBounds;
use tpoly_core::laurent::{algebraic_mutation, binomial_factor, mmlp, period_coefficients, LaurentPoly};
use tpoly_core::polygon::{enumerate_fano_polygons, mutate_polygon, polygon, FanoPolygon, MutationData, RCone};
use tpoly_core::rootlattice::{
    canonical_class, chain_extensions, classify_boundary, cycle_from_chain, embed_e8, en_roots, make_i1n,
    root_basis_coords, standard_root_basis, weyl_reflect, ClassLabel, LatticeVector,
};
use tpoly_core::{LatticePoint, Mat2};

const EXACT_LIMIT: Duration = Duration::from_secs(1);
const PERIOD_LIMIT: Duration = Duration::from_secs(10);
const CORPUS_LIMIT: Duration = Duration::from_secs(600);
const LATTICE_LIMIT: Duration = Duration::from_secs(60);
const PROPERTY_CASES: usize = 256;
const SEED: u64 = 20_240_917;

type Criterion = (&'static str, fn() -> Verdict);

/// Outcome of one criterion: failures found, plus a one-line summary.
struct Verdict {
    failures: Vec<String>,
    summary: String,
}

impl Verdict {
    fn new() -> Self {
        Verdict { failures: Vec::new(), summary: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

fn ints(xs: &[i64]) -> Vec<BigRational> {
    xs.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

fn trapezoid_checks() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let trapezoid = polygon(&[(-2, -1), (1, -1), (2, 1), (-2, 1)]).unwrap();
    let content = trapezoid.singularity_content();
    v.check(content.t_cones == 8, format!("t_cones {}", content.t_cones));
    v.check(content.basket == vec![RCone { residue: 1, height: 3 }], "basket");
    let m = MutationData::new(LatticePoint::new(0, -1), LatticePoint::new(1, 0), 1).unwrap();
    let image = mutate_polygon(&trapezoid, &m);
    let mutant = polygon(&[(-2, -1), (2, -1), (1, 1), (-2, 1)]).unwrap();
    v.check(image.as_ref() == Ok(&mutant), "mutation image");
    v.check(start.elapsed() < EXACT_LIMIT, format!("took {:?}", start.elapsed()));
    v.summary = format!("content {content}, mutation image exact");
    v
}

/// `const(f^d)` by schoolbook multiplication of integer polynomials.
fn naive_period(f: &LaurentPoly, dmax: usize) -> Vec<BigInt> {
    let base: BTreeMap<(i64, i64), BigInt> =
        f.terms().map(|(e, c)| ((e.x, e.y), c.to_integer())).collect();
    let mut power: BTreeMap<(i64, i64), BigInt> = [((0, 0), BigInt::from(1))].into_iter().collect();
    let mut out = vec![BigInt::from(1)];
    for _ in 1..=dmax {
        let mut next: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for ((a, b), c) in &power {
            for ((x, y), d) in &base {
                *next.entry((a + x, b + y)).or_default() += c * d;
            }
        }
        power = next;
        out.push(power.get(&(0, 0)).cloned().unwrap_or_default());
    }
    out
}

/// Oracle fingerprints c_0..c_8, frozen after first derivation.
const BASELINES: [(u32, [&str; 9]); 10] = [
    (1, ["1", "0", "10260", "2021280", "618874020", "184450426560", "57876331467600", "18570232920355200", "6075387296446904100"]),
    (2, ["1", "0", "276", "6816", "314532", "12853440", "569409360", "25533244800", "1170019563300"]),
    (3, ["1", "0", "54", "492", "9882", "158760", "2879640", "51982560", "964347930"]),
    (4, ["1", "0", "20", "96", "1188", "10560", "111440", "1142400", "12154660"]),
    (5, ["1", "0", "10", "30", "270", "1560", "11350", "77700", "560350"]),
    (6, ["1", "0", "6", "12", "90", "360", "2040", "10080", "54810"]),
    (7, ["1", "0", "4", "6", "36", "120", "490", "2100", "8260"]),
    (8, ["1", "0", "2", "6", "6", "60", "110", "420", "1750"]),
    (9, ["1", "0", "4", "0", "36", "0", "400", "0", "4900"]),
    (10, ["1", "0", "0", "6", "0", "0", "90", "0", "0"]),
];

fn period_anchors() -> Verdict {
    let mut v = Verdict::new();
    let catalog = Catalog::builtin();
    let anchors: [(u32, &[i64]); 5] = [
        (6, &[1, 0, 6, 12, 90, 360]),
        (7, &[1, 0, 4, 6, 36, 120]),
        (8, &[1, 0, 2, 6, 6, 60]),
        (9, &[1, 0, 4, 0, 36, 0, 400]),
        (4, &[1, 0, 20, 96]),
    ];
    for (id, expected) in anchors {
        let start = Instant::now();
        let fp = period_coefficients(&catalog.entry(id).unwrap().mmlp, expected.len() - 1);
        v.check(fp.coefficients == ints(expected), format!("id {id} anchor: got {fp}"));
        v.check(start.elapsed() < PERIOD_LIMIT, format!("id {id} took {:?}", start.elapsed()));
    }
    for (id, baseline) in BASELINES {
        let f = &catalog.entry(id).unwrap().mmlp;
        let expected: Vec<BigRational> =
            baseline.iter().map(|s| BigRational::from_integer(s.parse().unwrap())).collect();
        v.check(catalog.fingerprint(id).unwrap().coefficients == expected, format!("id {id} baseline"));
        let naive: Vec<BigRational> = naive_period(f, 8).into_iter().map(BigRational::from_integer).collect();
        v.check(naive == expected, format!("id {id} naive oracle"));
    }
    let report = catalog.validate();
    v.check(report.data_consistent(), "catalog data inconsistent");
    let mut documented = Vec::new();
    for id in [1u8, 2, 3, 5, 10] {
        let entry = report.entry(id).unwrap();
        let has = entry.discrepancies.iter().any(|d| {
            matches!(d, Discrepancy::PrintedVsOracle { .. } | Discrepancy::ClosedFormVsOracle { .. })
        });
        v.check(has, format!("id {id}: no documented difference"));
        if has {
            documented.push(id);
        }
    }
    for id in 6u8..=9 {
        v.check(report.entry(id).unwrap().printed_agrees(), format!("id {id}: printed disagrees"));
    }
    v.summary = format!("anchors 6,7,8,9 full and 4 prefix exact; differences documented for ids {documented:?}");
    v
}

fn classification_reproduction() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let catalog = Catalog::builtin();
    let corpus = build_corpus(&catalog, &CorpusSpec::default());
    let r = reproduce(&catalog, corpus, &ClassifyBounds::default());
    let elapsed = start.elapsed();
    let sizes = r.class_sizes();
    let indices = r.normal_indices();
    let ids: BTreeSet<u8> = sizes.keys().copied().collect();
    v.check(ids == (1..=10).collect(), format!("classes {ids:?}"));
    v.check(r.errors() == 0, format!("{} errors", r.errors()));
    v.check(r.walk_mismatches() == 0, format!("{} walks left their class", r.walk_mismatches()));
    v.check(indices.get(&8) == Some(&BTreeSet::from([1])), "class 8 index");
    v.check(indices.get(&9) == Some(&BTreeSet::from([2])), "class 9 index");
    v.check(elapsed <= CORPUS_LIMIT, format!("took {elapsed:?}"));
    v.summary = format!(
        "{} polygons, {} classes, witnesses {}/{}, {:.1}s",
        r.results.len(),
        sizes.len(),
        r.witnesses_found(),
        r.results.len(),
        elapsed.as_secs_f64()
    );
    v
}

fn random_unimodular(rng: &mut impl Rng) -> Mat2 {
    let gens = [Mat2::new(0, -1, 1, 0), Mat2::new(1, 1, 0, 1), Mat2::new(1, 0, 0, -1)];
    let len = rng.random_range(0..6);
    (0..len).fold(Mat2::IDENTITY, |acc, _| gens[rng.random_range(0..3)].compose(&acc))
}

/// A polynomial mutable along `(0,1)` with factor `(1+x)^k`, moved by a random `GL(2,Z)` element.
fn random_mutable(rng: &mut impl Rng) -> (LaurentPoly, MutationData, u32) {
    let k = rng.random_range(1..=2u32);
    let (lo, hi) = (rng.random_range(-2..=-1i64), rng.random_range(1..=2i64));
    let mut f = LaurentPoly::zero();
    for h in lo..=hi {
        let offset = rng.random_range(-2..=1i64);
        let mut part = LaurentPoly::zero();
        for i in 0..rng.random_range(1..=3i64) {
            let c = [-3i64, -2, -1, 1, 2, 3].choose(rng).copied().unwrap();
            part.add_term(LatticePoint::new(offset + i, h), BigRational::from_integer(c.into()));
        }
        if h < 0 {
            part = &part * &binomial_factor(LatticePoint::new(1, 0), k * h.unsigned_abs() as u32);
        }
        f = &f + &part;
    }
    let u = random_unimodular(rng);
    let m = MutationData::new(LatticePoint::new(0, 1), LatticePoint::new(1, 0), k.into()).unwrap().transform(&u);
    (f.substitute(&u), m, k)
}

fn property_suites() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let polys: Vec<FanoPolygon> =
        enumerate_fano_polygons(2).into_iter().filter(|p| !p.admissible_mutations().is_empty()).collect();
    let mut counts = [0usize; 5];
    for _ in 0..PROPERTY_CASES {
        let p = polys.choose(&mut rng).unwrap();
        let m = p.admissible_mutations().choose(&mut rng).copied().unwrap();
        let q = p.mutate(&m).unwrap();
        v.check(q.singularity_content().same_as(&p.singularity_content()), format!("content: {p} by {m}"));
        v.check(q.mutate(&m.inverse()).map(|r| r.normal_form()) == Ok(p.normal_form()), format!("reverse: {p}"));
        counts[0] += 1;
        counts[1] += 1;
    }
    while counts[2] < PROPERTY_CASES {
        let (f, m, k) = random_mutable(&mut rng);
        let g = match algebraic_mutation(&f, m.v(), &binomial_factor(m.w(), k)) {
            Ok(g) => g,
            Err(e) => {
                v.check(false, format!("constructed polynomial not mutable: {e}"));
                break;
            }
        };
        v.check(period_coefficients(&f, 6) == period_coefficients(&g, 6), format!("period: {f}"));
        counts[3] += 1;
        // Newton polygons need the origin inside; other draws only count for the period check
        if let (Ok(nf), Ok(ng)) = (f.newton_polygon(), g.newton_polygon()) {
            let image = mutate_polygon(&nf, &m).map(|p| p.normal_form());
            v.check(image == Ok(ng.normal_form()), format!("newton: {f}"));
            counts[2] += 1;
        }
    }
    for _ in 0..PROPERTY_CASES {
        let terms: Vec<((i64, i64), i64)> = (0..rng.random_range(1..6))
            .map(|_| ((rng.random_range(-2..=2), rng.random_range(-2..=2)), rng.random_range(-4..=4)))
            .collect();
        let f = LaurentPoly::from_int_terms(&terms);
        let a = BigRational::new(rng.random_range(-5..=5i64).into(), rng.random_range(1..=4i64).into());
        let base = period_coefficients(&f, 6).coefficients;
        let scaled = period_coefficients(&f.scale(&a), 6).coefficients;
        let mut power = BigRational::from_integer(1.into());
        for (s, b) in scaled.iter().zip(&base) {
            v.check(*s == b * &power, format!("scaling: {f} by {a}"));
            power *= &a;
        }
        counts[4] += 1;
    }
    v.summary = format!(
        "cases content {}, reversibility {}, newton {}, period {}, scaling {}; seed {SEED}",
        counts[0], counts[1], counts[2], counts[3], counts[4]
    );
    v.check(counts.iter().all(|&c| c >= 200), "fewer than 200 cases");
    v
}

/// The 240 roots of `E_8` in `I_{1,8}`, listed by type.
fn e8_roots_by_type() -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let e = |idx: &[usize], a0: i64, c: i64| {
        let mut v = vec![0i64; 9];
        v[0] = a0;
        for &i in idx {
            v[i] = c;
        }
        v
    };
    for i in 1..=8 {
        for j in 1..=8 {
            if i != j {
                let mut v = vec![0i64; 9];
                v[i] = 1;
                v[j] = -1;
                out.insert(v);
            }
        }
    }
    for s in [1i64, -1] {
        for i in 1..=8 {
            for j in i + 1..=8 {
                for k in j + 1..=8 {
                    out.insert(e(&[i, j, k], s, -s));
                }
                // 2e_0 minus six e_i: the complement of {i, j}
                let six: Vec<usize> = (1..=8).filter(|&l| l != i && l != j).collect();
                out.insert(e(&six, 2 * s, -s));
            }
            let mut v = e(&(1..=8).collect::<Vec<_>>(), 3 * s, -s);
            v[i] = -2 * s;
            out.insert(v);
        }
    }
    out
}

fn lattice_suite() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let roots = en_roots(8).unwrap();
    let found: BTreeSet<Vec<i64>> = roots.iter().map(|r| r.coords().to_vec()).collect();
    v.check(roots.len() == 240, format!("{} roots", roots.len()));
    v.check(found == e8_roots_by_type(), "root set differs from the typed list");

    let lattice = make_i1n(9);
    let e8: Vec<LatticeVector> = roots.iter().map(embed_e8).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cases = 0;
    while cases < PROPERTY_CASES {
        let rank = rng.random_range(2..=8);
        let mut chain: Vec<LatticeVector> = Vec::new();
        while chain.len() < rank {
            let options: Vec<&LatticeVector> = chain_extensions(&lattice, &e8, &chain).collect();
            match options.choose(&mut rng) {
                Some(g) => chain.push((*g).clone()),
                None => break,
            }
        }
        if chain.len() < rank {
            continue;
        }
        let cycle = cycle_from_chain(&chain);
        let before = classify_boundary(&cycle, &lattice).unwrap();
        let word: Vec<&LatticeVector> = (0..rng.random_range(0..=20)).map(|_| e8.choose(&mut rng).unwrap()).collect();
        let moved: Vec<LatticeVector> = cycle
            .iter()
            .map(|c| word.iter().fold(c.clone(), |acc, r| weyl_reflect(&lattice, r, &acc).unwrap()))
            .collect();
        v.check(classify_boundary(&moved, &lattice) == Ok(before), "Weyl invariance");
        let mut relabelled = cycle.clone();
        relabelled.rotate_left(rng.random_range(0..cycle.len()));
        relabelled.reverse();
        v.check(classify_boundary(&relabelled, &lattice) == Ok(before), "relabel invariance");
        cases += 1;
    }

    let labels = random_cycle_labels(7, 300, DEFAULT_SEED);
    let keys: Vec<ClassLabel> = labels.keys().copied().collect();
    v.check(keys == [ClassLabel::R7Primitive, ClassLabel::R7Imprimitive], format!("r=7 labels {labels:?}"));

    let coords = root_basis_coords(&canonical_class(9).neg(), &standard_root_basis(9));
    v.check(coords == Ok(vec![3, 2, 4, 6, 5, 4, 3, 2, 1]), format!("-k9 coordinates {coords:?}"));
    let elapsed = start.elapsed();
    v.check(elapsed <= LATTICE_LIMIT, format!("took {elapsed:?}"));
    v.summary = format!(
        "240 roots, {cases} invariance cases, r=7 labels {:?}, -k9 coords {:?}, {:.1}s",
        labels.iter().map(|(l, n)| format!("{l}:{n}")).collect::<Vec<_>>(),
        coords.unwrap_or_default(),
        elapsed.as_secs_f64()
    );
    v
}

fn binomial(n: i64, k: i64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn mmlp_solver() -> Verdict {
    let mut v = Verdict::new();
    let catalog = Catalog::builtin();
    for entry in catalog.entries() {
        let id = entry.id;
        let f = match mmlp(&entry.polygon, 3) {
            Ok(f) => f,
            Err(e) => {
                v.check(false, format!("id {id}: {e}"));
                continue;
            }
        };
        v.check(f == entry.mmlp, format!("id {id}: differs from the frozen polynomial"));
        v.check(f.constant_term() == BigRational::from_integer(0.into()), format!("id {id}: constant term"));
        for edge in entry.polygon.edges() {
            let d = edge.direction();
            for j in 0..=edge.length {
                let at = LatticePoint::new(edge.start.x + j * d.x, edge.start.y + j * d.y);
                let expected = BigRational::from_integer(binomial(edge.length, j));
                v.check(f.coefficient(at) == expected, format!("id {id}: edge coefficient at {at}"));
            }
        }
    }
    v.summary = "10 polygons solved at depth 3, uniqueness dimension 0, constant 0, binomial edges".into();
    v
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("trapezoid content and mutation", trapezoid_checks),
        ("period anchors", period_anchors),
        ("classification reproduction", classification_reproduction),
        ("property suites", property_suites),
        ("lattice suite", lattice_suite),
        ("mmlp solver", mmlp_solver),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let status = if verdict.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {} ({name}): {status} [{:.2}s] {}", i + 1, start.elapsed().as_secs_f64(), verdict.summary);
        for f in verdict.failures.iter().take(10) {
            println!("    {f}");
        }
        if !verdict.failures.is_empty() {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
