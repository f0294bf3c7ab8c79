//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use irrep_core::altrep::{associator, split_basis, AltBranch, AltIrrep, AltIrrepLabel};
use irrep_core::gelfand::{gt_dimension, GTWeight, GlIrrep};
use irrep_core::hadamard::{simulate_estimate, Part, ShotPlan};
use irrep_core::linalg::{max_abs, CMatrix, CVector, SparseOperator, ONE, ZERO};
use irrep_core::liegroup::{
    norm_profile, two_level_decompose, unitary_eigenvalues, weyl_character_u, weyl_dimension, OrthogonalRep,
    UnitaryRep,
};
use irrep_core::perm::{all_permutations, hard_instance, CycleType, Permutation};
use irrep_core::random::{haar_special_unitary, haar_unitary, random_antihermitian, random_permutation};
use irrep_core::schar::{estimate_normalized_character, exact_character_roichman};
use irrep_core::symrep::SymIrrep;
use irrep_core::tableaux::{enumerate_syt, hook_walk_sample, partitions, YoungDiagram};
use nalgebra::DMatrix;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn shapes_up_to(n: usize) -> Vec<YoungDiagram> {
    (1..=n).flat_map(partitions).collect()
}

fn dense_adjacent(irrep: &SymIrrep, i: usize) -> CMatrix {
    irrep.rep_adjacent(i).unwrap().to_dense()
}

fn sym_homomorphism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for shape in shapes_up_to(6) {
        let irrep = SymIrrep::new(&shape).unwrap();
        let n = shape.n();
        let d = irrep.dim();
        let id = CMatrix::identity(d, d);
        let gens: Vec<CMatrix> = (1..n).map(|i| dense_adjacent(&irrep, i)).collect();
        for i in 0..gens.len() {
            worst = worst.max(max_abs(&(&gens[i] * &gens[i] - &id)));
            for j in i + 1..gens.len() {
                let rel = if j == i + 1 {
                    let b = &gens[i] * &gens[j];
                    &b * &b * &b - &id
                } else {
                    &gens[i] * &gens[j] - &gens[j] * &gens[i]
                };
                worst = worst.max(max_abs(&rel));
            }
        }
        for _ in 0..500 {
            let p = random_permutation(n, &mut rng);
            let q = random_permutation(n, &mut rng);
            let lhs = irrep.rep_permutation(&p.compose(&q).unwrap()).unwrap().into_matrix();
            let rhs = irrep.rep_permutation(&p).unwrap().into_matrix() * irrep.rep_permutation(&q).unwrap().into_matrix();
            worst = worst.max(max_abs(&(lhs - rhs)));
        }
    }
    outcome(worst <= 1e-9, format!("max error {worst:.2e}"))
}

fn rms_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let shapes = shapes_up_to(6);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let shape = shapes.choose(&mut rng).unwrap();
        let irrep = SymIrrep::new(shape).unwrap();
        let p = random_permutation(shape.n(), &mut rng);
        let m = irrep.rep_permutation(&p).unwrap().into_matrix();
        let d = irrep.dim() as f64;
        let rms = (m.iter().map(|z| z.norm_sqr()).sum::<f64>() / (d * d)).sqrt();
        worst = worst.max((rms - 1.0 / d.sqrt()).abs());
    }
    outcome(worst <= 1e-12, format!("max deviation {worst:.2e}"))
}

fn roichman_oracle() -> Outcome {
    let mut checked = 0;
    let mut mismatches = 0;
    for n in 1..=7 {
        let classes: Vec<CycleType> = partitions(n).iter().map(|p| CycleType::new(p.rows().to_vec()).unwrap()).collect();
        for shape in partitions(n) {
            let irrep = SymIrrep::new(&shape).unwrap();
            for mu in &classes {
                let trace = irrep.exact_character(&mu.representative()).unwrap();
                let rule = exact_character_roichman(&shape, mu).unwrap();
                checked += 1;
                if (trace - rule as f64).abs() > 1e-9 || (trace - trace.round()).abs() > 1e-9 {
                    mismatches += 1;
                }
            }
        }
    }
    outcome(mismatches == 0, format!("{checked} (shape, class) pairs, {mismatches} mismatches"))
}

fn hook_walk_uniformity() -> Outcome {
    let shape = YoungDiagram::new(vec![3, 2, 1]).unwrap();
    let tableaux = enumerate_syt(&shape).unwrap();
    let mut counts = vec![0usize; tableaux.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let samples = 16_000;
    for _ in 0..samples {
        let t = hook_walk_sample(&shape, &mut rng);
        counts[tableaux.iter().position(|s| *s == t).unwrap()] += 1;
    }
    let expected = samples as f64 / tableaux.len() as f64;
    let stat: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let p = ChiSquared::new((tableaux.len() - 1) as f64).unwrap().sf(stat);
    outcome(tableaux.len() == 16 && p >= 1e-3, format!("{} outcomes, chi2 {stat:.2}, p {p:.3}", tableaux.len()))
}

fn character_estimator() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let shapes = partitions(10);
    let epsilon = 0.1;
    let mut hits = 0;
    for run in 0..20 {
        let shape = shapes.choose(&mut rng).unwrap();
        let mu = CycleType::new(shapes.choose(&mut rng).unwrap().rows().to_vec()).unwrap();
        let d = shape.num_syt().unwrap() as f64;
        let exact = exact_character_roichman(shape, &mu).unwrap() as f64 / d;
        let report = estimate_normalized_character(shape, &mu, epsilon, 0.05, run, 1).unwrap();
        if (report.estimate - exact).abs() <= epsilon {
            hits += 1;
        }
    }
    outcome(hits >= 18, format!("{hits}/20 within epsilon"))
}

fn alternating_split() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut dims_ok = true;
    let mut count = 0;
    for shape in shapes_up_to(6).into_iter().filter(YoungDiagram::is_self_conjugate) {
        count += 1;
        let irrep = SymIrrep::new(&shape).unwrap();
        let d = irrep.dim();
        let s = associator(&shape).unwrap().to_dense();
        worst = worst.max(max_abs(&(&s * &s - CMatrix::identity(d, d))));
        let split = split_basis(&shape).unwrap();
        dims_ok &= split.plus.len() + split.minus.len() == d;
        let plus = AltIrrep::new(AltIrrepLabel::new(shape.clone(), AltBranch::Plus).unwrap()).unwrap();
        let minus = (!split.minus.is_empty())
            .then(|| AltIrrep::new(AltIrrepLabel::new(shape.clone(), AltBranch::Minus).unwrap()).unwrap());
        for p in all_permutations(shape.n()).into_iter().filter(Permutation::is_even) {
            let rho = irrep.rep_permutation(&p).unwrap().into_matrix();
            worst = worst.max(max_abs(&(&s * &rho - &rho * &s)));
            let mut split_char = plus.character(&p).unwrap();
            if let Some(minus) = &minus {
                split_char += minus.character(&p).unwrap();
            }
            worst = worst.max((split_char - rho.trace()).norm());
        }
    }
    outcome(dims_ok && worst <= 1e-9 && count > 0, format!("{count} shapes, max error {worst:.2e}"))
}

fn random_gl_weight(rng: &mut ChaCha8Rng, max_n: usize, lo: i64, hi: i64) -> Vec<i64> {
    let n = rng.random_range(1..=max_n);
    let mut w: Vec<i64> = (0..n).map(|_| rng.random_range(lo..=hi)).collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

fn gl_relation_error(irrep: &GlIrrep) -> f64 {
    let n = irrep.n();
    let e: Vec<Vec<SparseOperator>> =
        (1..=n).map(|i| (1..=n).map(|j| irrep.generator(i, j).unwrap()).collect()).collect();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut terms = vec![(ONE, e[i][j].commutator(&e[k][l]))];
                    if j == k {
                        terms.push((-ONE, e[i][l].clone()));
                    }
                    if l == i {
                        terms.push((ONE, e[k][j].clone()));
                    }
                    let diff = SparseOperator::linear_combination(irrep.dim(), terms.iter().map(|(c, m)| (*c, m)));
                    worst = worst.max(diff.max_abs());
                }
            }
        }
    }
    worst
}

fn gt_commutation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let w = random_gl_weight(&mut rng, 4, -2, 3);
        worst = worst.max(gl_relation_error(&GlIrrep::new(&GTWeight::gl(&w).unwrap()).unwrap()));
    }
    outcome(worst <= 1e-8, format!("max error {worst:.2e}"))
}

fn dimension_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bad = 0;
    for _ in 0..50 {
        let w = random_gl_weight(&mut rng, 5, -3, 4);
        if gt_dimension(&GTWeight::gl(&w).unwrap()).unwrap() as u128 != weyl_dimension(&w).unwrap() {
            bad += 1;
        }
    }
    for j in 0..=3i64 {
        if gt_dimension(&GTWeight::so(3, vec![2 * j]).unwrap()).unwrap() as i64 != 2 * j + 1 {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{bad} disagreements over 54 weights"))
}

fn unitary_characters() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst: f64 = 0.0;
    for w in [[2, 1, 0], [1, 1, 0], [3, 0, 0], [1, 0, -1]] {
        let rep = UnitaryRep::new(&GTWeight::gl(&w).unwrap()).unwrap();
        for _ in 0..10 {
            let u = haar_unitary(3, &mut rng);
            let chi = weyl_character_u(&w, &unitary_eigenvalues(&u).unwrap()).unwrap();
            worst = worst.max((rep.apply(&u).unwrap().trace() - chi).norm());
        }
    }
    outcome(worst <= 1e-6, format!("max error {worst:.2e}"))
}

fn su_reduction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for base in [[2, 1, 0], [1, 0, 0], [2, 0, -1]] {
        let reference = UnitaryRep::new(&GTWeight::gl(&base).unwrap()).unwrap();
        for s in [1, 2] {
            let shifted: Vec<i64> = base.iter().map(|m| m + s).collect();
            let rep = UnitaryRep::new(&GTWeight::gl(&shifted).unwrap()).unwrap();
            for _ in 0..5 {
                let u = haar_special_unitary(3, &mut rng);
                let diff = rep.apply(&u).unwrap().into_matrix() - reference.apply(&u).unwrap().into_matrix();
                worst = worst.max(max_abs(&diff));
            }
        }
    }
    outcome(worst <= 1e-8, format!("max error {worst:.2e}"))
}

fn axis_rotation(axis: [f64; 3], theta: f64) -> DMatrix<f64> {
    let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [x, y, z] = axis.map(|a| a / norm);
    let k = DMatrix::from_row_slice(3, 3, &[0.0, -z, y, z, 0.0, -x, -y, x, 0.0]);
    DMatrix::identity(3, 3) + &k * theta.sin() + &k * &k * (1.0 - theta.cos())
}

fn so3_traces() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let spin1 = OrthogonalRep::new(&GTWeight::so(3, vec![2]).unwrap()).unwrap();
    let spin2 = OrthogonalRep::new(&GTWeight::so(3, vec![4]).unwrap()).unwrap();
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let theta = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        let axis = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
        let g = axis_rotation(axis, theta);
        let t1 = spin1.apply(&g).unwrap().trace();
        let t2 = spin2.apply(&g).unwrap().trace();
        let c1 = 1.0 + 2.0 * theta.cos();
        let c2 = c1 + 2.0 * (2.0 * theta).cos();
        worst = worst.max((t1 - c1).norm()).max((t2 - c2).norm());
    }
    outcome(worst <= 1e-6, format!("max error {worst:.2e}"))
}

fn norm_independence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let mut w = random_gl_weight(&mut rng, 4, -2, 3);
        if w.len() < 2 {
            w.push(w[0] - 1);
        }
        let h = random_antihermitian(2, &mut rng);
        let norms: Vec<f64> = norm_profile(&GTWeight::gl(&w).unwrap(), &h).unwrap().iter().map(|e| e.spectral_norm).collect();
        let spread = norms.iter().cloned().fold(f64::MIN, f64::max) - norms.iter().cloned().fold(f64::MAX, f64::min);
        worst = worst.max(spread);
    }
    outcome(worst <= 1e-8, format!("max spread {worst:.2e}"))
}

fn two_level_reconstruction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut worst: f64 = 0.0;
    let mut most = 0;
    for _ in 0..20 {
        let u = haar_unitary(5, &mut rng);
        let factors = two_level_decompose(&u).unwrap();
        most = most.max(factors.len());
        let prod = factors.iter().fold(CMatrix::identity(5, 5), |acc, f| acc * f.embed(5));
        worst = worst.max(max_abs(&(prod - u)));
    }
    outcome(worst <= 1e-9 && most <= 15, format!("max error {worst:.2e}, at most {most} factors"))
}

fn hadamard_end_to_end() -> Outcome {
    let shape = YoungDiagram::new(vec![3, 2, 1]).unwrap();
    let irrep = SymIrrep::new(&shape).unwrap();
    let rho = irrep.rep_permutation(&hard_instance(6).unwrap()).unwrap();
    let index = (0..irrep.dim()).max_by(|&a, &b| rho.get(a, a).re.abs().total_cmp(&rho.get(b, b).re.abs())).unwrap();
    let t = &irrep.basis()[index];
    let exact = irrep.matrix_element(&hard_instance(6).unwrap(), t, t).unwrap();
    let mut psi = CVector::from_element(irrep.dim(), ZERO);
    psi[index] = ONE;
    let epsilon = 0.05;
    let plan = ShotPlan::new(epsilon, 0.01, Part::Real).unwrap();
    let hits = (0..100u64)
        .filter(|&seed| (simulate_estimate(&rho, &psi, &plan, seed, 1).unwrap().estimate - exact).abs() <= epsilon)
        .count();
    outcome(hits >= 95, format!("element {exact:.4}, {hits}/100 within epsilon"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("S_n homomorphism and Coxeter relations", sym_homomorphism),
        ("RMS of matrix entries", rms_law),
        ("Roichman rule vs trace", roichman_oracle),
        ("hook-walk uniformity", hook_walk_uniformity),
        ("normalized character estimator", character_estimator),
        ("A_n split", alternating_split),
        ("GT commutation relations", gt_commutation),
        ("GT vs Weyl dimensions", dimension_agreement),
        ("U(3) trace vs Weyl character", unitary_characters),
        ("SU(3) weight shift", su_reduction),
        ("SO(3) rotation traces", so3_traces),
        ("norm independence of position", norm_independence),
        ("two-level decomposition of U(5)", two_level_reconstruction),
        ("Hadamard test end to end", hadamard_end_to_end),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed().as_secs_f64();
        let status = if result.pass { "PASS" } else { "FAIL" };
        println!("{status} [{:>2}] {name}: {} ({elapsed:.2}s)", i + 1, result.detail);
        failures += usize::from(!result.pass);
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
