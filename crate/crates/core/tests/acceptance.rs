use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::Instant;

use monobasis::sequences::{seq_fflv, seq_from_indices, seq_lusztig, seq_nz, seq_string, Preset};
use monobasis::verma::gram_at_depth;
use monobasis::{
    compute_basis, essential_direct, generator_census, kodaira, Backend, CensusOptions,
    ChevalleyBasis, Engine, EngineOptions, EssentialSet, Family, Generator, MonomialOrder,
    RootSystem, VermaModule, VermaVector, Weight, WeylWord,
};
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn chevalley(family: Family, rank: usize) -> Arc<ChevalleyBasis> {
    let rs = Arc::new(RootSystem::new(family, rank).unwrap());
    Arc::new(ChevalleyBasis::new(rs).unwrap())
}

fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lowest_exponents(es: &EssentialSet) -> Vec<Vec<u32>> {
    let by_depth = es.by_depth();
    let deepest = by_depth
        .keys()
        .max_by_key(|d| d.iter().sum::<u32>())
        .unwrap()
        .clone();
    by_depth[&deepest].clone()
}

fn sl3_example() -> Outcome {
    let start = Instant::now();
    let cb = chevalley(Family::A, 2);
    let rs = cb.root_system();
    let lambda = w(&[1, 1]);
    let opts = EngineOptions::default();
    let cases: Vec<(Vec<usize>, Vec<MonomialOrder>, Vec<u32>)> = vec![
        (vec![1, 3, 2], vec![MonomialOrder::NegLex], vec![1, 1, 1]),
        (vec![3, 1, 2], vec![MonomialOrder::NegLex], vec![2, 0, 0]),
        (
            vec![1, 2, 1],
            MonomialOrder::all_kinds(vec![1, 2, 1]),
            vec![1, 2, 1],
        ),
    ];
    for (indices, orders, expected) in cases {
        let seq = seq_from_indices(rs, &indices).unwrap();
        for order in orders {
            for backend in [Backend::Irreducible, Backend::Shapovalov] {
                let es = essential_direct(&cb, &seq, &order, &lambda, backend, &opts)
                    .map_err(|e| e.to_string())?;
                let low = lowest_exponents(&es);
                ensure(low == vec![expected.clone()], || {
                    format!("{indices:?} {order}: lowest {low:?}, expected {expected:?}")
                })?;
            }
            let es = compute_basis(cb.clone(), &seq, &order, &lambda, &opts)
                .map_err(|e| e.to_string())?;
            ensure(lowest_exponents(&es) == vec![expected.clone()], || {
                format!("{indices:?} {order}: engine disagrees")
            })?;
        }
    }
    let ms = start.elapsed().as_millis();
    ensure(ms < 1000, || format!("took {ms} ms"))?;
    Ok(format!(
        "three cases exact on both backends and the engine ({ms} ms)"
    ))
}

fn weyl_dimensions() -> Outcome {
    let a3 = RootSystem::new(Family::A, 3).unwrap();
    let a4 = RootSystem::new(Family::A, 4).unwrap();
    let cases: [(&RootSystem, &[i64], u128); 6] = [
        (&a3, &[1, 3, 2], 756),
        (&a3, &[3, 3, 3], 4096),
        (&a3, &[3, 4, 2], 4320),
        (&a3, &[6, 6, 6], 117649),
        (&a4, &[2, 2, 2, 2], 59049),
        (&a4, &[1, 3, 2, 1], 31185),
    ];
    for (rs, lambda, expected) in cases {
        let d = rs.weyl_dimension(&w(lambda)).unwrap();
        ensure(d == expected, || format!("{lambda:?}: {d} != {expected}"))?;
    }
    Ok("six table dimensions exact".into())
}

struct Case {
    cb: Arc<ChevalleyBasis>,
    label: String,
    preset: Preset,
    lambda: Weight,
}

/// Weights run with every sequence and order, and larger ones run with the presets only.
fn type_weights(family: Family, rank: usize) -> (Vec<Weight>, Vec<Weight>) {
    match (family, rank) {
        (Family::A, 2) => (
            vec![w(&[1, 0]), w(&[1, 1]), w(&[2, 1])],
            vec![w(&[3, 2]), w(&[4, 4]), w(&[16, 16])],
        ),
        (Family::A, 3) => (
            vec![w(&[1, 0, 0]), w(&[0, 1, 0]), w(&[1, 0, 1])],
            vec![w(&[1, 1, 1]), w(&[2, 1, 2]), w(&[2, 2, 2]), w(&[3, 3, 3])],
        ),
        (Family::B, 2) => (
            vec![w(&[1, 0]), w(&[0, 1]), w(&[1, 1])],
            vec![w(&[2, 2]), w(&[3, 3]), w(&[6, 6])],
        ),
        (Family::C, 2) => (
            vec![w(&[1, 0]), w(&[0, 1]), w(&[1, 1])],
            vec![w(&[2, 2]), w(&[2, 4]), w(&[4, 6])],
        ),
        (Family::G, 2) => (
            vec![w(&[1, 0]), w(&[0, 1])],
            vec![w(&[1, 1]), w(&[2, 1]), w(&[2, 2]), w(&[3, 2])],
        ),
        _ => unreachable!(),
    }
}

fn grid() -> Vec<Case> {
    let mut cases = Vec::new();
    for (family, rank) in [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::C, 2),
        (Family::G, 2),
    ] {
        let cb = chevalley(family, rank);
        let rs = cb.root_system();
        let word = rs.longest_word();
        let reversed = WeylWord(word.letters().iter().rev().copied().collect());
        let presets = [
            ("fflv".to_string(), seq_fflv(rs)),
            ("string".to_string(), seq_string(rs, &word).unwrap()),
            ("nz".to_string(), seq_nz(rs, &word).unwrap()),
            ("lusztig".to_string(), seq_lusztig(rs, &word).unwrap()),
        ];
        let ascending: Vec<usize> = (1..=rs.num_positive()).collect();
        let along: Vec<usize> = rs
            .roots_along_word(&reversed)
            .unwrap()
            .into_iter()
            .map(|k| k + 1)
            .collect();
        let mut customs = Vec::new();
        for (name, indices) in [("ascending", ascending), ("reversed-word", along)] {
            let seq = seq_from_indices(rs, &indices).unwrap();
            let weights: Vec<u32> = (1..=seq.len() as u32).collect();
            for order in MonomialOrder::all_kinds(weights) {
                customs.push((
                    format!("{name}/{order}"),
                    Preset {
                        sequence: seq.clone(),
                        order,
                    },
                ));
            }
        }
        let (small, large) = type_weights(family, rank);
        for (label, preset) in presets.iter().chain(customs.iter()) {
            let is_preset = presets.iter().any(|(l, _)| l == label);
            let weights = small
                .iter()
                .chain(large.iter().filter(|_| is_preset))
                .cloned();
            for lambda in weights {
                cases.push(Case {
                    cb: cb.clone(),
                    label: format!("{family}{rank} {label}"),
                    preset: preset.clone(),
                    lambda,
                });
            }
        }
    }
    cases
}

struct GridRun {
    results: Vec<(usize, Arc<EssentialSet>)>,
}

fn run_grid(cases: &[Case]) -> Result<GridRun, String> {
    let opts = EngineOptions::default();
    let mut engines: BTreeMap<String, Engine> = BTreeMap::new();
    let mut results = Vec::new();
    for (i, case) in cases.iter().enumerate() {
        let engine = engines.entry(case.label.clone()).or_insert_with(|| {
            Engine::new(
                case.cb.clone(),
                case.preset.sequence.clone(),
                case.preset.order.clone(),
                opts.clone(),
            )
            .unwrap()
        });
        let es = engine
            .compute(&case.lambda)
            .map_err(|e| format!("{} {}: {e}", case.label, case.lambda))?;
        results.push((i, es));
    }
    Ok(GridRun { results })
}

fn grid_dimensions(cases: &[Case], run: &GridRun, secs: f64) -> Outcome {
    let mut max_dim = 0;
    for (i, es) in &run.results {
        let case = &cases[*i];
        let expected = case.cb.root_system().weyl_dimension(&case.lambda).unwrap() as usize;
        ensure(expected <= 5000, || {
            format!("grid case too large: {expected}")
        })?;
        ensure(es.dimension() == expected, || {
            format!(
                "{} {}: {} exponents, dimension {expected}",
                case.label,
                case.lambda,
                es.dimension()
            )
        })?;
        max_dim = max_dim.max(expected);
    }
    ensure(secs < 600.0, || format!("grid took {secs:.1} s"))?;
    Ok(format!(
        "{} cases over A2 A3 B2 C2 G2, max dimension {max_dim} ({secs:.1} s)",
        run.results.len()
    ))
}

fn a4_decomposition() -> Outcome {
    let cb = chevalley(Family::A, 4);
    let seq = seq_from_indices(cb.root_system(), &[1, 2, 3, 4, 1, 5, 8, 2, 6, 3]).unwrap();
    let es = compute_basis(
        cb,
        &seq,
        &MonomialOrder::DegRevLex,
        &w(&[2, 1, 2, 1]),
        &EngineOptions::default(),
    )
    .map_err(|e| e.to_string())?;
    let expected = vec![
        Generator {
            weight: w(&[1, 0, 0, 0]),
            multiplicity: 2,
        },
        Generator {
            weight: w(&[0, 1, 0, 0]),
            multiplicity: 1,
        },
        Generator {
            weight: w(&[0, 0, 1, 0]),
            multiplicity: 2,
        },
        Generator {
            weight: w(&[0, 0, 0, 1]),
            multiplicity: 1,
        },
    ];
    let got: BTreeSet<_> = es.generators.iter().cloned().collect();
    let want: BTreeSet<_> = expected.into_iter().collect();
    ensure(got == want, || format!("generators {:?}", es.generators))?;
    ensure(es.dimension() == 8750, || {
        format!("dimension {}", es.dimension())
    })?;
    Ok("generators 2ϖ1 + ϖ2 + 2ϖ3 + ϖ4".into())
}

fn g2_kodaira() -> Outcome {
    let start = Instant::now();
    let cb = chevalley(Family::G, 2);
    let seq = seq_from_indices(cb.root_system(), &[1, 2, 3, 4, 5, 6]).unwrap();
    let mut engine = Engine::new(cb, seq, MonomialOrder::InvLex, EngineOptions::default())
        .map_err(|e| e.to_string())?;
    let r = kodaira(&mut engine, &w(&[1, 0]), 6).map_err(|e| e.to_string())?;
    ensure(r.truncated.is_none(), || "truncated".into())?;
    ensure(r.counts == vec![7, 5, 14, 7, 12, 8], || {
        format!("counts {:?}", r.counts)
    })?;
    Ok(format!(
        "counts {:?} ({:.1} s)",
        r.counts,
        start.elapsed().as_secs_f64()
    ))
}

fn oracle_equivalence(cases: &[Case], run: &GridRun) -> Outcome {
    let opts = EngineOptions::default();
    let mut checked = 0;
    for (i, es) in &run.results {
        let case = &cases[*i];
        if es.dimension() > 1000 {
            continue;
        }
        let direct = essential_direct(
            &case.cb,
            &case.preset.sequence,
            &case.preset.order,
            &case.lambda,
            Backend::Irreducible,
            &opts,
        )
        .map_err(|e| format!("{} {}: {e}", case.label, case.lambda))?;
        ensure(direct.exponents == es.exponents, || {
            format!("{} {}: engine and direct differ", case.label, case.lambda)
        })?;
        checked += 1;
    }
    Ok(format!("{checked} cases identical"))
}

fn minkowski_containment() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let opts = EngineOptions::default();
    let mut total = 0;
    for (family, rank) in [(Family::A, 2), (Family::A, 3), (Family::B, 2)] {
        let cb = chevalley(family, rank);
        let rs = cb.root_system();
        let word = rs.longest_word();
        let presets = [
            seq_fflv(rs),
            seq_string(rs, &word).unwrap(),
            seq_nz(rs, &word).unwrap(),
            seq_lusztig(rs, &word).unwrap(),
        ];
        for preset in presets {
            let mut engine = Engine::new(
                cb.clone(),
                preset.sequence.clone(),
                preset.order.clone(),
                opts.clone(),
            )
            .unwrap();
            let mut pairs = 0;
            while pairs < 100 {
                let lambda = Weight((0..rank).map(|_| rng.random_range(0..=3)).collect());
                let mu = Weight((0..rank).map(|_| rng.random_range(0..=3)).collect());
                let sum = Weight(lambda.0.iter().zip(&mu.0).map(|(a, b)| a + b).collect());
                if rs.weyl_dimension(&sum).unwrap() > 1500 {
                    continue;
                }
                let a = engine.compute(&lambda).map_err(|e| e.to_string())?;
                let b = engine.compute(&mu).map_err(|e| e.to_string())?;
                let c = engine.compute(&sum).map_err(|e| e.to_string())?;
                for x in &a.exponents {
                    for y in &b.exponents {
                        let z: Vec<u32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                        ensure(c.contains(&z), || {
                            format!("{family}{rank} {lambda}+{mu}: {z:?} missing")
                        })?;
                    }
                }
                pairs += 1;
            }
            total += pairs;
        }
    }
    Ok(format!(
        "{total} random pairs over A2 A3 B2 and four presets"
    ))
}

fn backend_checks(cases: &[Case]) -> Outcome {
    let mut spaces = 0;
    let mut modules = 0;
    let mut seen = BTreeSet::new();
    for case in cases {
        let rs = case.cb.root_system();
        let key = (rs.family(), rs.rank(), case.lambda.clone());
        if !seen.insert(key) {
            continue;
        }
        let ws = rs.freudenthal_multiplicities(&case.lambda).unwrap();
        let weyl = rs.weyl_dimension(&case.lambda).unwrap();
        ensure(ws.total() == weyl, || {
            format!(
                "{}: multiplicities sum {} != {weyl}",
                case.lambda,
                ws.total()
            )
        })?;
        if weyl > 120 {
            continue;
        }
        let verma = VermaModule::new(&case.cb, &case.lambda).unwrap();
        for entry in &ws.entries {
            let ctx = gram_at_depth(&verma, &entry.depth);
            ensure(ctx.rank() as u64 == entry.mult, || {
                format!(
                    "{} at {}: Gram rank {} != multiplicity {}",
                    case.lambda,
                    entry.weight,
                    ctx.rank(),
                    entry.mult
                )
            })?;
            spaces += 1;
        }
        modules += 1;
    }

    let mut rng = StdRng::seed_from_u64(7);
    let mut strings = 0;
    for (family, rank) in [
        (Family::A, 2),
        (Family::B, 2),
        (Family::G, 2),
        (Family::A, 3),
    ] {
        let cb = chevalley(family, rank);
        let rs = cb.root_system();
        for _ in 0..25 {
            let lambda = Weight((0..rank).map(|_| rng.random_range(0..=5)).collect());
            let i = rng.random_range(0..rank);
            let k: u32 = rng.random_range(1..=6);
            let verma = VermaModule::new(&cb, &lambda).unwrap();
            let alpha = rs.simple_root_index(i);
            let mut v = verma.highest();
            for _ in 0..k - 1 {
                v = verma.apply_f(alpha, &v);
            }
            let lower = v.clone();
            let top = verma.apply_f(alpha, &v);
            let lhs = verma.apply_e(alpha, &top);
            let c = i64::from(k) * (lambda.0[i] - i64::from(k) + 1);
            let rhs = lower.scaled(&BigRational::from_integer(c.into()));
            ensure(vector_eq(&lhs, &rhs), || {
                format!("{family}{rank} {lambda} i={} k={k}", i + 1)
            })?;
            strings += 1;
        }
    }
    Ok(format!(
        "{spaces} weight spaces over {modules} modules, {strings} random sl2 strings"
    ))
}

fn vector_eq(a: &VermaVector, b: &VermaVector) -> bool {
    let mut diff = a.clone();
    diff.add_scaled(b, &BigRational::from_integer((-1).into()));
    diff.is_zero()
}

fn census_a3() -> Outcome {
    let start = Instant::now();
    let cb = chevalley(Family::A, 3);
    let r = generator_census(
        cb,
        &w(&[2, 2, 2]),
        &CensusOptions::default(),
        &EngineOptions::default(),
    )
    .map_err(|e| e.to_string())?;
    ensure(r.classes == 8 && r.words.len() == 8, || {
        format!("{} classes", r.classes)
    })?;
    for word in &r.words {
        ensure(word.dimension == 729, || {
            format!("{}: dimension {}", word.word, word.dimension)
        })?;
        for i in 0..3 {
            ensure(
                word.monoid_generators.contains(&Weight::fundamental(3, i)),
                || format!("{}: fundamental {} missing", word.word, i + 1),
            )?;
        }
    }
    Ok(format!(
        "8 classes complete, all contain the fundamentals, observed max generator level {} ({:.1} s)",
        r.max_generator_level,
        start.elapsed().as_secs_f64()
    ))
}

fn determinism(cases: &[Case], run: &GridRun) -> Outcome {
    let again = run_grid(cases)?;
    let mut compared = 0;
    for ((_, a), (_, b)) in run.results.iter().zip(&again.results) {
        let ja = serde_json::to_string_pretty(&a.report()).unwrap();
        let jb = serde_json::to_string_pretty(&b.report()).unwrap();
        ensure(ja == jb, || format!("{} differs", a.lambda))?;
        compared += 1;
    }
    Ok(format!(
        "{compared} reports byte-identical across two runs; no external timing baseline"
    ))
}

fn report(failed: &mut u32, n: u32, name: &str, outcome: Outcome) {
    match outcome {
        Ok(detail) => println!("PASS criterion {n}: {name}: {detail}"),
        Err(detail) => {
            *failed += 1;
            println!("FAIL criterion {n}: {name}: {detail}");
        }
    }
}

fn main() {
    let mut failed = 0;
    report(&mut failed, 1, "sl3 example", sl3_example());
    report(&mut failed, 2, "Weyl dimensions", weyl_dimensions());

    let cases = grid();
    let start = Instant::now();
    let run = run_grid(&cases);
    let secs = start.elapsed().as_secs_f64();
    let on_grid = |f: &dyn Fn(&GridRun) -> Outcome| match &run {
        Ok(run) => f(run),
        Err(e) => Err(e.clone()),
    };
    let grid_dims = on_grid(&|r| grid_dimensions(&cases, r, secs));
    report(&mut failed, 3, "grid dimensions", grid_dims);
    report(&mut failed, 4, "A4 decomposition", a4_decomposition());
    report(&mut failed, 5, "G2 Kodaira", g2_kodaira());
    let oracle = on_grid(&|r| oracle_equivalence(&cases, r));
    report(&mut failed, 6, "oracle equivalence", oracle);
    report(
        &mut failed,
        7,
        "Minkowski containment",
        minkowski_containment(),
    );
    report(
        &mut failed,
        8,
        "backend cross-checks",
        backend_checks(&cases),
    );
    report(&mut failed, 9, "A3 census", census_a3());
    let repeat = on_grid(&|r| determinism(&cases, r));
    report(&mut failed, 10, "determinism", repeat);
    if failed > 0 {
        std::process::exit(1);
    }
}
