use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::{json, Number, Value};

use parsimonious_core::{
    enumerate_addends, expand_game, is_uniform, k_fibonacci, mpt_triangle, quota_polynomial,
    quota_recursive, twin, type_weights, Addend, Coalition, FreeTypeRepr, Oracle,
    VerificationReport,
};

use crate::format::{format_tuple, join, parse_repr};
use crate::{parallel, Cli, CliError, Command, Response, EXIT_OK, EXIT_PROPERTY};

/// Big integers go into JSON as plain numbers, digit for digit.
pub fn num(value: &BigUint) -> Value {
    Value::Number(Number::from_str(&value.to_string()).expect("decimal digits form a JSON number"))
}

fn nums<'a>(values: impl IntoIterator<Item = &'a BigUint>) -> Value {
    Value::Array(values.into_iter().map(num).collect())
}

fn representation(text: &str) -> Result<FreeTypeRepr, CliError> {
    Ok(FreeTypeRepr::new(&parse_repr(text)?)?)
}

fn counts(fx: &FreeTypeRepr) -> String {
    join(fx.counts(), ",")
}

/// `x1x2x3`, or `1` for the empty product.
fn monomial(addend: &Addend) -> String {
    if addend.is_empty() {
        "1".to_string()
    } else {
        addend.indices().iter().map(|i| format!("x{i}")).collect()
    }
}

pub fn dispatch(cli: &Cli) -> Result<Response, CliError> {
    match &cli.command {
        Command::Quota { repr } => quota(repr, cli.breakdown),
        Command::Expand { repr } => expand(repr),
        Command::Kfib { k, n_max } => kfib(*k, *n_max),
        Command::Triangle { n_max } => triangle(*n_max),
        Command::Addends { h } => addends(*h),
        Command::Twin { repr } => twin_cmd(repr),
        Command::Verify { repr } => verify(repr, cli.bound),
    }
}

pub fn quota(repr: &str, breakdown: bool) -> Result<Response, CliError> {
    let fx = representation(repr)?;
    let recursive = quota_recursive(&fx);
    let expansion = quota_polynomial(&fx);
    let agree = recursive == expansion.total;
    let uniform = is_uniform(&fx);
    let h = fx.h();

    let mut text = String::new();
    writeln!(text, "representation: {}", counts(&fx)).unwrap();
    writeln!(text, "types: {h}").unwrap();
    writeln!(text, "players: {}", fx.n()).unwrap();
    writeln!(text, "quota (recurrence): {recursive}").unwrap();
    writeln!(text, "quota (polynomial): {}", expansion.total).unwrap();
    if let Some(k) = uniform {
        writeln!(text, "uniform: k={k}, quota = F_{h}({k})").unwrap();
    }
    if breakdown {
        let terms = join(expansion.addends.iter().map(|(a, _)| monomial(a)), " + ");
        let values = join(expansion.values(), " + ");
        writeln!(text, "q_{h} = {terms}").unwrap();
        writeln!(text, "    = {values} = {}", expansion.total).unwrap();
    }
    if !agree {
        writeln!(text, "error: recurrence and polynomial expansion disagree").unwrap();
    }

    let mut result = json!({
        "h": h,
        "n": fx.n().to_string().parse::<Number>().expect("integer"),
        "quota": num(&recursive),
        "recursive": num(&recursive),
        "polynomial": num(&expansion.total),
        "agree": agree,
        "uniform_k": uniform,
    });
    if breakdown {
        result["addends"] = expansion
            .addends
            .iter()
            .map(|(a, v)| json!({ "indices": a.indices(), "value": num(v) }))
            .collect();
    }
    Ok(Response {
        input: json!({ "repr": counts(&fx), "breakdown": breakdown }),
        text,
        result,
        exit: if agree { EXIT_OK } else { EXIT_PROPERTY },
    })
}

pub fn expand(repr: &str) -> Result<Response, CliError> {
    let fx = representation(repr)?;
    let game = expand_game(&fx);
    let profile = type_weights(&fx);
    let tuple = format_tuple(&game.quota, &game.player_weights);

    let mut text = String::new();
    writeln!(text, "{tuple}").unwrap();
    writeln!(text, "types: {}", fx.h()).unwrap();
    writeln!(text, "players: {}", game.n()).unwrap();
    writeln!(text, "type weights: {}", join(&profile.weights[1..], ",")).unwrap();
    writeln!(text, "top weight: {}", profile.top_weight).unwrap();
    writeln!(text, "total weight: {}", game.total_weight).unwrap();

    Ok(Response {
        input: json!({ "repr": counts(&fx) }),
        text,
        result: json!({
            "tuple": tuple,
            "quota": num(&game.quota),
            "player_weights": nums(&game.player_weights),
            "type_weights": nums(&profile.weights),
            "top_weight": num(&profile.top_weight),
            "total_weight": num(&game.total_weight),
            "h": fx.h(),
            "n": game.n(),
        }),
        exit: EXIT_OK,
    })
}

pub fn kfib(k: u64, n_max: u32) -> Result<Response, CliError> {
    if k == 0 {
        return Err(CliError::Argument("k must be at least 1".into()));
    }
    let sequence: Vec<BigUint> = (0..=n_max).map(|n| k_fibonacci(k, n)).collect();
    Ok(Response {
        input: json!({ "k": k, "n_max": n_max }),
        text: format!("{}\n", join(&sequence, " ")),
        result: json!({ "sequence": nums(&sequence) }),
        exit: EXIT_OK,
    })
}

pub fn triangle(n_max: usize) -> Result<Response, CliError> {
    if n_max == 0 {
        return Err(CliError::Argument("n_max must be at least 1".into()));
    }
    let t = mpt_triangle(n_max);
    let mut text = String::new();
    for (i, row) in t.rows().enumerate() {
        writeln!(text, "{}: {}", i + 1, join(row, " ")).unwrap();
    }
    Ok(Response {
        input: json!({ "n_max": n_max }),
        text,
        result: json!({ "rows": t.rows().map(nums).collect::<Vec<_>>() }),
        exit: EXIT_OK,
    })
}

pub fn addends(h: usize) -> Result<Response, CliError> {
    let all = enumerate_addends(h)?;
    let mut text = String::new();
    for a in &all {
        writeln!(text, "{a} {}", monomial(a)).unwrap();
    }
    writeln!(text, "count: {}", all.len()).unwrap();
    Ok(Response {
        input: json!({ "h": h }),
        text,
        result: json!({
            "count": all.len(),
            "addends": all.iter().map(|a| a.indices()).collect::<Vec<_>>(),
        }),
        exit: EXIT_OK,
    })
}

pub fn twin_cmd(repr: &str) -> Result<Response, CliError> {
    let fx = representation(repr)?;
    let t = twin(&fx);
    let quota = quota_recursive(&fx);
    let twin_quota = quota_recursive(&t.repr);
    let equal = quota == twin_quota;

    let mut text = String::new();
    writeln!(text, "representation: {}", counts(&fx)).unwrap();
    writeln!(text, "twin: {}", counts(&t.repr)).unwrap();
    writeln!(text, "quota: {quota}").unwrap();
    writeln!(text, "twin quota: {twin_quota}").unwrap();
    if t.self_twin {
        writeln!(
            text,
            "notice: the representation is a palindrome, it is its own twin"
        )
        .unwrap();
    }
    if !equal {
        writeln!(text, "error: twin quotas differ").unwrap();
    }
    Ok(Response {
        input: json!({ "repr": counts(&fx) }),
        text,
        result: json!({
            "twin": counts(&t.repr),
            "quota": num(&quota),
            "twin_quota": num(&twin_quota),
            "self_twin": t.self_twin,
            "equal": equal,
        }),
        exit: if equal { EXIT_OK } else { EXIT_PROPERTY },
    })
}

fn coalitions(list: &[Coalition]) -> Value {
    list.iter().map(|c| c.members()).collect()
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

pub fn verify(repr: &str, bound: usize) -> Result<Response, CliError> {
    let fx = representation(repr)?;
    let game = expand_game(&fx);
    let oracle = Oracle {
        bound,
        ..Oracle::default()
    };
    let report: VerificationReport = parallel::verify(&oracle, &game)?;

    let mut text = String::new();
    writeln!(
        text,
        "game: {}",
        format_tuple(&game.quota, &game.player_weights)
    )
    .unwrap();
    writeln!(text, "players: {}", report.n).unwrap();
    writeln!(text, "minimal winning coalitions: {}", report.mwc_count).unwrap();
    writeln!(text, "constant sum: {}", status(report.constant_sum_ok)).unwrap();
    for c in &report.constant_sum_witnesses {
        writeln!(text, "  witness: {c}").unwrap();
    }
    writeln!(text, "homogeneous: {}", status(report.homogeneous_ok)).unwrap();
    for c in &report.homogeneous_witnesses {
        writeln!(text, "  witness: {c}").unwrap();
    }
    writeln!(text, "quota identity: {}", status(report.quota_identity_ok)).unwrap();
    writeln!(text, "parsimonious: {}", status(report.parsimonious_ok)).unwrap();

    Ok(Response {
        input: json!({ "repr": counts(&fx), "bound": bound }),
        text,
        result: json!({
            "game": format_tuple(&game.quota, &game.player_weights),
            "n": report.n,
            "mwc_count": report.mwc_count,
            "constant_sum_ok": report.constant_sum_ok,
            "homogeneous_ok": report.homogeneous_ok,
            "quota_identity_ok": report.quota_identity_ok,
            "parsimonious_ok": report.parsimonious_ok,
            "constant_sum_witnesses": coalitions(&report.constant_sum_witnesses),
            "homogeneous_witnesses": coalitions(&report.homogeneous_witnesses),
        }),
        exit: if report.all_ok() {
            EXIT_OK
        } else {
            EXIT_PROPERTY
        },
    })
}
