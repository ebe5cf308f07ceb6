//! The acceptance suite. Every comparison is exact; one line is printed per
//! criterion and the process exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use sl3_fusion::linalg::{rat, Rat};
use sl3_fusion::oracle::{realize_irrep, Generator};
use sl3_fusion::qseries::{GradedDecomposition, QPolynomial};
use sl3_fusion::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn dw(a: u32, b: u32) -> DominantWeight {
    DominantWeight::new(a, b)
}

fn pairs(max: u32) -> impl Iterator<Item = (DominantWeight, DominantWeight)> {
    DominantWeight::grid(max).flat_map(move |l| DominantWeight::grid(max).map(move |m| (l, m)))
}

fn dimension_identity() -> Outcome {
    let mut n = 0;
    for (l, m) in pairs(8) {
        let (got, want) = (dimension_via_filtration(l, m), weyl_dim(l) * weyl_dim(m));
        if got != want {
            return Err(format!("{l} {m}: {got} != {want}"));
        }
        n += 1;
    }
    Ok(format!("{n} pairs"))
}

fn lr_versus_tensor() -> Outcome {
    let mut n = 0;
    for (l, m) in pairs(6) {
        let tensor = tensor_decompose(l, m).map_err(|e| e.to_string())?;
        let top = l.height() + m.height();
        for eta in DominantWeight::grid(top as u32) {
            let want = tensor.get(&eta).copied().unwrap_or(0);
            let got = lr_coefficient(l, m, eta);
            if got != want {
                return Err(format!("c^{eta}_{{{l},{m}}}: {got} != {want}"));
            }
        }
        n += 1;
    }
    Ok(format!("{n} pairs"))
}

fn oracle_agreement() -> Outcome {
    let z = EvaluationParams::default();
    let mut n = 0;
    for (l, m) in pairs(20) {
        if weyl_dim(l) * weyl_dim(m) > 300 {
            continue;
        }
        let oracle = graded_decompose_oracle(l, m, &z).map_err(|e| format!("{l} {m}: {e}"))?;
        let closed = graded_character_closed(l, m);
        if oracle != closed {
            return Err(format!("{l} {m}: oracle {} closed {}", oracle.to_text(), closed.to_text()));
        }
        n += 1;
    }
    Ok(format!("{n} pairs"))
}

fn z_independence() -> Outcome {
    let a = EvaluationParams::from_integers(0, 1).unwrap();
    let b = EvaluationParams::from_integers(2, 5).unwrap();
    let cases = [(dw(1, 0), dw(1, 0)), (dw(1, 0), dw(0, 1)), (dw(1, 1), dw(1, 1)), (dw(2, 1), dw(1, 1)), (dw(2, 0), dw(0, 2))];
    for (l, m) in cases {
        let x = fusion_graded_character(l, m, &a).map_err(|e| e.to_string())?;
        let y = fusion_graded_character(l, m, &b).map_err(|e| e.to_string())?;
        if x != y {
            return Err(format!("{l} {m}"));
        }
    }
    Ok(format!("{} pairs", cases.len()))
}

fn spot_fixtures() -> Outcome {
    let q = |c: &[u64]| QPolynomial::from_coeffs(c.to_vec());
    let fixtures = [
        ((dw(1, 0), dw(1, 0)), vec![(dw(2, 0), q(&[1])), (dw(0, 1), q(&[0, 1]))]),
        ((dw(1, 0), dw(0, 1)), vec![(dw(1, 1), q(&[1])), (dw(0, 0), q(&[0, 1]))]),
        (
            (dw(1, 1), dw(1, 1)),
            vec![
                (dw(2, 2), q(&[1])),
                (dw(3, 0), q(&[0, 1])),
                (dw(0, 3), q(&[0, 1])),
                (dw(1, 1), q(&[0, 1, 1])),
                (dw(0, 0), q(&[0, 0, 1])),
            ],
        ),
    ];
    let z = EvaluationParams::default();
    for ((l, m), summands) in fixtures {
        let want = GradedDecomposition::from_summands(summands);
        let closed = graded_character_closed(l, m);
        let oracle = graded_decompose_oracle(l, m, &z).map_err(|e| e.to_string())?;
        if closed != want || oracle != want {
            return Err(format!("{l} {m}: closed {} oracle {}", closed.to_text(), oracle.to_text()));
        }
    }
    let dim = graded_character_closed(dw(1, 1), dw(1, 1)).dimension();
    if dim != 64 {
        return Err(format!("dim F_(1,1),(1,1) = {dim}"));
    }
    Ok("3 fixtures".into())
}

fn multiplicity_free() -> Outcome {
    let mut n = 0;
    for l in DominantWeight::grid(6) {
        for m1 in 1..=l.c1() as u32 {
            let d = graded_character_closed(l, dw(m1, 0));
            if let Some((nu, p)) = d.summands().iter().find(|(_, p)| !p.is_unit_monomial()) {
                return Err(format!("{l} ({m1},0): [{nu}] = {p}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} pairs"))
}

fn structural_invariants() -> Outcome {
    let mut n = 0;
    for (l, m) in pairs(5) {
        let d = graded_character_closed(l, m);
        let top = DominantWeight::try_from(l.weight() + m.weight()).unwrap();
        if d.grade(0) != BTreeMap::from([(top, 1)]) {
            return Err(format!("{l} {m}: grade 0 is {:?}", d.grade(0)));
        }
        let bound = l.height().min(m.height()) as usize;
        if d.max_grade().unwrap_or(0) > bound {
            return Err(format!("{l} {m}: grade {:?} > {bound}", d.max_grade()));
        }
        if graded_character_closed(l.involution(), m.involution()) != d.involuted() {
            return Err(format!("{l} {m}: involution"));
        }
        if graded_character_closed(m, l) != d {
            return Err(format!("{l} {m}: symmetry"));
        }
        n += 1;
    }
    Ok(format!("{n} pairs"))
}

fn realization_census() -> Outcome {
    let mut n = 0;
    for l in DominantWeight::grid(20).filter(|l| weyl_dim(*l) <= 100) {
        let r = realize_irrep(l).map_err(|e| e.to_string())?;
        if &r.census() != irrep_character(l).terms() {
            return Err(format!("{l}: census"));
        }
        let mut hv = vec![Rat::zero(); r.dim];
        hv[r.highest_vector_index] = rat(1);
        let zero = |v: &[Rat]| v.iter().all(Zero::is_zero);
        for (g, e, k) in [(Generator::X1Minus, Generator::X1Plus, l.c1()), (Generator::X2Minus, Generator::X2Plus, l.c2())] {
            if !zero(&r.action(e).apply(&hv)) {
                return Err(format!("{l}: not a highest vector"));
            }
            let mut v = hv.clone();
            for _ in 0..k {
                v = r.action(g).apply(&v);
            }
            if zero(&v) {
                return Err(format!("{l}: {g:?}^{k} kills the highest vector"));
            }
            if !zero(&r.action(g).apply(&v)) {
                return Err(format!("{l}: {g:?}^{} does not kill the highest vector", k + 1));
            }
        }
        n += 1;
    }
    Ok(format!("{n} highest weights"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 dimension identity, coords <= 8", dimension_identity),
        ("2 LR coefficients vs tensor oracle, coords <= 6", lr_versus_tensor),
        ("3 graded closed form vs fusion oracle, dim product <= 300", oracle_agreement),
        ("4 z-independence, z=(0,1) vs z=(2,5)", z_independence),
        ("5 spot fixtures", spot_fixtures),
        ("6 multiplicity-free for mu = mu1 w1", multiplicity_free),
        ("7 structural invariants, coords <= 5", structural_invariants),
        ("8 realization census and nilpotency, dim <= 100", realization_census),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = Duration::as_secs_f64(&start.elapsed());
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({detail}, {secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
