//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line; the process exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use parsimonious_core::{
    enumerate_addends, expand_game, fibonacci, is_uniform, k_fibonacci, k_fibonacci_binet,
    k_fibonacci_binomial, k_fibonacci_mpt, mpt_triangle, quota_polynomial, quota_recursive, twin,
    verify_parsimonious, BigUint, FreeTypeRepr, GameRepresentation,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fx(raw: &[i64]) -> FreeTypeRepr {
    FreeTypeRepr::new(raw).expect("valid representation")
}

fn values(fx: &FreeTypeRepr) -> Vec<u64> {
    quota_polynomial(fx)
        .values()
        .map(|v| u64::try_from(v).expect("small value"))
        .collect()
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn example_1() -> Outcome {
    let start = Instant::now();
    let x = fx(&[3, 1, 2, 2]);
    let game = expand_game(&x).to_string();
    let twin_game = expand_game(&twin(&x).repr).to_string();
    let breakdown = values(&x);
    let elapsed = start.elapsed();

    check(game == "(26;1,1,1,3,4,4,11,11,15)", || {
        format!("game {game}")
    })?;
    check(twin_game == "(26;1,1,2,2,5,7,7,7,19)", || {
        format!("twin {twin_game}")
    })?;
    check(breakdown == [1, 3, 6, 4, 12], || {
        format!("breakdown {breakdown:?}")
    })?;
    check(elapsed < Duration::from_millis(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{game}, twin {twin_game}, {elapsed:?}"))
}

fn example_2() -> Outcome {
    let x = fx(&[2, 2, 2, 2, 2]);
    let game = expand_game(&x);
    let pell = k_fibonacci(2, 6);
    let by_hand = BigUint::from(3u32 * 2 + 4 * 8 + 32);
    check(
        game.to_string() == "(70;1,1,2,2,5,5,12,12,29,29,41)",
        || format!("game {game}"),
    )?;
    check(game.quota == pell && pell == by_hand, || {
        format!("quota {} vs F_6(2) = {pell}", game.quota)
    })?;
    check(quota_polynomial(&x).total == by_hand, || {
        "polynomial".into()
    })?;
    check(is_uniform(&x) == Some(2), || {
        "not detected as uniform".into()
    })?;
    Ok(format!("{game} = F_6(2)"))
}

fn example_3() -> Outcome {
    let x = fx(&[2, 1, 3, 2, 2]);
    let game = expand_game(&x).to_string();
    let twin_game = expand_game(&twin(&x).repr).to_string();
    let breakdown = values(&x);
    check(game == "(61;1,1,2,3,3,3,11,11,25,25,36)", || {
        format!("game {game}")
    })?;
    check(breakdown == [2, 3, 2, 6, 4, 8, 12, 24], || {
        format!("breakdown {breakdown:?}")
    })?;
    check(twin_game == "(61;1,1,2,2,5,5,5,17,22,22,39)", || {
        format!("twin {twin_game}")
    })?;
    check(x.n() == 11, || format!("n = {}", x.n()))?;
    Ok(format!("{game}, twin {twin_game}"))
}

fn sweep() -> Vec<FreeTypeRepr> {
    (2..=8)
        .flat_map(|h| common::representations_with_types(h, 4))
        .collect()
}

fn recursive_equals_polynomial() -> Outcome {
    let start = Instant::now();
    let games = sweep();
    for x in &games {
        let rec = quota_recursive(x);
        let poly = quota_polynomial(x).total;
        check(rec == poly, || {
            format!("{x}: recursive {rec}, polynomial {poly}")
        })?;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{} representations, {elapsed:?}", games.len()))
}

fn addend_counts() -> Outcome {
    for h in 2..=20usize {
        let count = enumerate_addends(h).map_err(|e| e.to_string())?.len();
        check(BigUint::from(count) == fibonacci(h as u32), || {
            format!("h={h}: {count} addends")
        })?;
    }
    for h in 2..=16usize {
        let enumerated: Vec<Vec<usize>> = enumerate_addends(h)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|a| a.indices().to_vec())
            .collect();
        check(enumerated == common::powerset_addends(h), || {
            format!("h={h}: enumeration differs from power-set filter")
        })?;
    }
    Ok("F_h addends for h = 2..20, power-set identical for h <= 16".into())
}

fn four_formula_agreement() -> Outcome {
    let mut binet_checked = 0;
    for k in 1..=10u64 {
        for n in 1..=30u32 {
            let exact = k_fibonacci(k, n);
            let binomial = k_fibonacci_binomial(k, n);
            let mpt = k_fibonacci_mpt(k, n);
            check(binomial == exact && mpt == exact, || {
                format!("k={k} n={n}: {exact} / {binomial} / {mpt}")
            })?;
            if exact.bits() <= 53 {
                let exact_f = u64::try_from(&exact).expect("fits") as f64;
                let approx = k_fibonacci_binet(k, n).value;
                let rel = (approx - exact_f).abs() / exact_f;
                check(rel <= 1e-9, || {
                    format!("k={k} n={n}: Binet rel error {rel:e}")
                })?;
                binet_checked += 1;
            }
        }
    }
    Ok(format!(
        "300 exact triples, {binet_checked} Binet values within 1e-9"
    ))
}

fn table_one() -> Outcome {
    const TABLE: [&[u32]; 8] = [
        &[1],
        &[0, 1],
        &[1, 0, 1],
        &[0, 2, 0, 1],
        &[1, 0, 3, 0, 1],
        &[0, 3, 0, 4, 0, 1],
        &[1, 0, 6, 0, 5, 0, 1],
        &[0, 4, 0, 10, 0, 6, 0, 1],
    ];
    let triangle = mpt_triangle(30);
    let mut entries = 0;
    for (i, printed) in TABLE.iter().enumerate() {
        let row: Vec<BigUint> = printed.iter().map(|&c| BigUint::from(c)).collect();
        check(triangle.row(i + 1) == row.as_slice(), || {
            format!("row {}", i + 1)
        })?;
        entries += printed.len();
    }
    check(entries == 36, || format!("{entries} entries"))?;
    for n in 1..=30 {
        let sum: BigUint = triangle.row(n).iter().sum();
        check(sum == fibonacci(n as u32), || format!("row sum n={n}"))?;
    }
    Ok("36 entries, row sums F_n for n <= 30".into())
}

fn twin_quota() -> Outcome {
    let games = sweep();
    for x in &games {
        let reversed = twin(x).repr;
        check(quota_recursive(x) == quota_recursive(&reversed), || {
            format!("{x} vs {reversed}")
        })?;
    }
    Ok(format!("{} representations", games.len()))
}

fn end_to_end_verification() -> Outcome {
    let start = Instant::now();
    let mut verified = 0;
    for n in 4..=14 {
        for x in common::representations_with_players(n) {
            let report = verify_parsimonious(&expand_game(&x)).map_err(|e| e.to_string())?;
            check(
                report.constant_sum_ok
                    && report.homogeneous_ok
                    && report.quota_identity_ok
                    && report.mwc_count == n as u64,
                || format!("{x}: {report:?}"),
            )?;
            verified += 1;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{verified} games with n <= 14, {elapsed:?}"))
}

fn negative_control() -> Outcome {
    let base = expand_game(&fx(&[3, 1, 2, 2]));
    let mut mutations = 0;
    for position in 0..base.n() {
        for delta in [-1i32, 1] {
            let mut weights = base.player_weights.clone();
            let w = &weights[position];
            weights[position] = if delta < 0 { w - 1u32 } else { w + 1u32 };
            let game = GameRepresentation::from_weights(base.quota.clone(), weights);
            let report = verify_parsimonious(&game).map_err(|e| e.to_string())?;
            check(!report.all_ok(), || {
                format!("position {position} delta {delta} still verifies")
            })?;
            mutations += 1;
        }
    }
    check(mutations == 18, || format!("{mutations} mutations"))?;
    Ok("all 18 single-weight mutations rejected".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 example 1 regression", example_1),
        ("2 example 2 regression", example_2),
        ("3 example 3 regression", example_3),
        ("4 recursive = polynomial", recursive_equals_polynomial),
        ("5 addend counts", addend_counts),
        ("6 four-formula k-Fibonacci", four_formula_agreement),
        ("7 modified Pascal triangle", table_one),
        ("8 twin quota", twin_quota),
        ("9 end-to-end verification", end_to_end_verification),
        ("10 negative control", negative_control),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
