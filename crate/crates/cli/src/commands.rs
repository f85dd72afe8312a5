use std::fmt::Write as _;
use std::fs;

use serde_json::{json, Value};

use orient_core::congruence::{
    commutative_cancellative_congruence, commutative_congruence, quotient, Congruence,
};
use orient_core::orientability::{
    orientable_set, search_one_var, search_two_var, sigma_report, Exactness, SigmaReport,
    Verdict, WitnessRecord, DEFAULT_ONE_VAR_BOUND, DEFAULT_TWO_VAR_BOUND,
};
use orient_core::theorem::{
    build_two_var_witness_with, orientable_witness_for, verify_propositions, verify_theorem1,
    verify_theorem2, DecompositionTable, VerificationReport,
};
use orient_core::{
    adjoin_identity, group_structure, parse_table, serialize, Error,
    GroupStructure, Monoid1, Semigroup,
};

use crate::{Command, Common, Format, QuotientBy, Suite};

pub const EXIT_TABLE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NOT_GROUP: u8 = 3;
pub const EXIT_EXACT: u8 = 4;
pub const EXIT_CHECK_FAILED: u8 = 5;

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
    pub code: u8,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        kind: "usage",
        message: message.into(),
        code: EXIT_USAGE,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (kind, code) = match &e {
            Error::NotAGroup(_) => ("not-a-group", EXIT_NOT_GROUP),
            Error::UnknownFamily(_) | Error::FamilyParameter { .. } => ("usage", EXIT_USAGE),
            Error::OutOfRange { .. } | Error::NotRelated { .. } => ("usage", EXIT_USAGE),
            _ => ("table", EXIT_TABLE),
        };
        CliError {
            kind,
            message: e.to_string(),
            code,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct Loaded {
    subject: String,
    s: Semigroup,
}

fn load(common: &Common) -> CliResult<Loaded> {
    if let Some(path) = &common.input.table {
        let text = fs::read_to_string(path).map_err(|e| CliError {
            kind: "table",
            message: format!("cannot read {}: {e}", path.display()),
            code: EXIT_TABLE,
        })?;
        let s = parse_table(&text)?;
        return Ok(Loaded {
            subject: path.display().to_string(),
            s,
        });
    }
    let spec = common
        .input
        .family
        .as_deref()
        .ok_or_else(|| usage("one of --table or --family is required"))?;
    let family: orient_core::Family = spec.parse()?;
    Ok(Loaded {
        subject: family.to_string(),
        s: family.build()?,
    })
}

fn resolve(s: &Semigroup, name: &str) -> CliResult<usize> {
    s.index_of(name.trim())
        .ok_or_else(|| usage(format!("unknown element `{}`", name.trim())))
}

fn resolve_pair(s: &Semigroup, pair: &str) -> CliResult<(usize, usize)> {
    let (u, v) = pair
        .split_once(',')
        .ok_or_else(|| usage(format!("--pair expects `u,v`, got `{pair}`")))?;
    Ok((resolve(s, u)?, resolve(s, v)?))
}

/// Group structure for `--exact`; a non-group is exit code 4.
fn exact_group(s: &Semigroup) -> CliResult<GroupStructure> {
    group_structure(s).map_err(|e| CliError {
        kind: "exact-requires-group",
        message: format!("--exact needs a group: {e}"),
        code: EXIT_EXACT,
    })
}

fn json_out(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn names(s: &Semigroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.name(x).to_string()).collect()
}

fn brace(s: &Semigroup, xs: &[usize]) -> String {
    format!("{{{}}}", names(s, xs).join(", "))
}

fn no_witness(bound: usize) -> String {
    format!("no witness with n <= {bound}")
}

fn table_json(s: &Semigroup) -> Value {
    let rows: Vec<Vec<&str>> = s
        .elements()
        .map(|i| s.elements().map(|j| s.name(s.mul(i, j))).collect())
        .collect();
    json!({ "elements": s.names(), "table": rows })
}

pub fn run(cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Check(c) => check(&c),
        Command::Info(c) => info(&c),
        Command::Family(c) => family(&c),
        Command::Orientable { common, bound, exact } => orientable(&common, bound, exact),
        Command::Witness {
            common,
            element,
            pair,
            from_json,
            bound,
            exact,
        } => {
            let loaded = load(&common)?;
            let m = adjoin_identity(&loaded.s);
            if let Some(path) = from_json {
                if exact {
                    return Err(usage("--exact cannot be combined with --from-json"));
                }
                return validate_json(&m, &path);
            }
            match (element, pair) {
                (Some(e), None) => witness_element(&common, &m, &e, bound, exact),
                (None, Some(p)) => witness_pair(&common, &m, &p, bound, exact),
                _ => Err(usage("witness needs exactly one of --element, --pair, --from-json")),
            }
        }
        Command::Sigma { common, bound, exact } => sigma(&common, bound, exact),
        Command::Quotient {
            common,
            by,
            bound,
            exact,
        } => quotient_cmd(&common, by, bound, exact),
        Command::Commutator { common, pair } => commutator(&common, pair.as_deref()),
        Command::Abelianization(c) => abelianization(&c),
        Command::Verify {
            common,
            suite,
            bound,
        } => verify(&common, suite, bound),
    }
}

fn check(c: &Common) -> CliResult<Output> {
    let l = load(c)?;
    Ok(Output::ok(match c.format {
        Format::Text => format!("ok: {} is a semigroup of order {}\n", l.subject, l.s.order()),
        Format::Json => json_out(json!({
            "subject": l.subject,
            "valid": true,
            "order": l.s.order(),
        })),
    }))
}

fn info(c: &Common) -> CliResult<Output> {
    let l = load(c)?;
    let s = &l.s;
    let group = group_structure(s).ok();
    let identity = s.identity().map(|e| s.name(e).to_string());
    let idempotents = names(s, &s.idempotents());
    let derived = group.as_ref().map(|g| names(s, &g.commutator_subgroup()));
    Ok(Output::ok(match c.format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "subject: {}", l.subject).unwrap();
            writeln!(out, "order: {}", s.order()).unwrap();
            writeln!(out, "commutative: {}", s.is_commutative()).unwrap();
            writeln!(out, "cancellative: {}", s.is_cancellative()).unwrap();
            writeln!(out, "identity: {}", identity.as_deref().unwrap_or("none")).unwrap();
            writeln!(out, "idempotents: {{{}}}", idempotents.join(", ")).unwrap();
            writeln!(out, "group: {}", group.is_some()).unwrap();
            if let Some(d) = &derived {
                writeln!(out, "commutator subgroup: {{{}}}", d.join(", ")).unwrap();
            }
            out
        }
        Format::Json => json_out(json!({
            "subject": l.subject,
            "order": s.order(),
            "commutative": s.is_commutative(),
            "cancellative": s.is_cancellative(),
            "identity": identity,
            "idempotents": idempotents,
            "group": group.is_some(),
            "commutator_subgroup": derived,
        })),
    }))
}

fn family(c: &Common) -> CliResult<Output> {
    let l = load(c)?;
    Ok(Output::ok(match c.format {
        Format::Text => serialize(&l.s),
        Format::Json => json_out(table_json(&l.s)),
    }))
}

fn orientable(c: &Common, bound: usize, exact: bool) -> CliResult<Output> {
    let l = load(c)?;
    let s = &l.s;
    let m = adjoin_identity(s);
    // (element, witness) per element; `None` witness means none found
    let witnesses = if exact {
        let g = exact_group(s)?;
        let table = DecompositionTable::new(&g);
        s.elements()
            .map(|x| orientable_witness_for(&g, &table, x).ok())
            .collect()
    } else {
        orientable_set(&m, bound)
    };
    let missing = if exact {
        "not orientable (outside the commutator subgroup)".to_string()
    } else {
        no_witness(bound)
    };
    let found: Vec<usize> = s.elements().filter(|&x| witnesses[x].is_some()).collect();
    Ok(Output::ok(match c.format {
        Format::Text => {
            let mut out = format!("subject: {}\n", l.subject);
            if exact {
                out.push_str("mode: exact (commutator subgroup)\n");
            } else {
                writeln!(out, "bound: {bound}").unwrap();
            }
            for x in s.elements() {
                match &witnesses[x] {
                    Some(w) => writeln!(out, "{}: {}", s.name(x), w.render(s)).unwrap(),
                    None => writeln!(out, "{}: {missing}", s.name(x)).unwrap(),
                }
            }
            writeln!(out, "orientable: {}", brace(s, &found)).unwrap();
            out
        }
        Format::Json => {
            let elements: Vec<Value> = s
                .elements()
                .map(|x| {
                    let record = witnesses[x]
                        .as_ref()
                        .map(|w| WitnessRecord::one_var(&m, x, w))
                        .transpose()?;
                    Ok(json!({
                        "element": s.name(x),
                        "orientable": record.is_some(),
                        "witness": record,
                    }))
                })
                .collect::<CliResult<_>>()?;
            json_out(json!({
                "subject": l.subject,
                "bound": if exact { Value::Null } else { json!(bound) },
                "exact": exact,
                "elements": elements,
                "orientable": names(s, &found),
            }))
        }
    }))
}

fn witness_element(
    c: &Common,
    m: &Monoid1,
    element: &str,
    bound: Option<usize>,
    exact: bool,
) -> CliResult<Output> {
    let s = m.base();
    let g = resolve(s, element)?;
    let bound = bound.unwrap_or(DEFAULT_ONE_VAR_BOUND);
    let (w, missing) = if exact {
        let grp = exact_group(s)?;
        let table = DecompositionTable::new(&grp);
        (
            orientable_witness_for(&grp, &table, g).ok(),
            "not orientable (outside the commutator subgroup)".to_string(),
        )
    } else {
        (search_one_var(m, g, bound), no_witness(bound))
    };
    Ok(Output::ok(match (c.format, w) {
        (Format::Text, Some(w)) => format!("{}: {}\n", s.name(g), w.render(s)),
        (Format::Text, None) => format!("{}: {missing}\n", s.name(g)),
        (Format::Json, Some(w)) => json_out(serde_json::to_value(WitnessRecord::one_var(m, g, &w)?).unwrap()),
        (Format::Json, None) => json_out(json!({
            "kind": "one-var",
            "element": s.name(g),
            "found": false,
            "bound": if exact { Value::Null } else { json!(bound) },
            "details": missing,
        })),
    }))
}

fn witness_pair(
    c: &Common,
    m: &Monoid1,
    pair: &str,
    bound: Option<usize>,
    exact: bool,
) -> CliResult<Output> {
    let s = m.base();
    let (u, v) = resolve_pair(s, pair)?;
    let bound = bound.unwrap_or(DEFAULT_TWO_VAR_BOUND);
    let (w, missing) = if exact {
        let grp = exact_group(s)?;
        let table = DecompositionTable::new(&grp);
        (
            build_two_var_witness_with(&grp, &table, v, u).ok(),
            "not related (different commutator cosets)".to_string(),
        )
    } else {
        (search_two_var(m, u, v, bound), no_witness(bound))
    };
    let label = format!("({}, {})", s.name(u), s.name(v));
    Ok(Output::ok(match (c.format, w) {
        (Format::Text, Some(w)) => format!("{label}: {}\n", w.render(s)),
        (Format::Text, None) => format!("{label}: {missing}\n"),
        (Format::Json, Some(w)) => {
            json_out(serde_json::to_value(WitnessRecord::two_var(m, u, v, &w)?).unwrap())
        }
        (Format::Json, None) => json_out(json!({
            "kind": "two-var",
            "pair": [s.name(u), s.name(v)],
            "found": false,
            "bound": if exact { Value::Null } else { json!(bound) },
            "details": missing,
        })),
    }))
}

fn validate_json(m: &Monoid1, path: &std::path::Path) -> CliResult<Output> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let record: WitnessRecord = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: not a witness record: {e}", path.display())))?;
    let resolved = record
        .resolve(m.base())
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    match resolved.validate(m)? {
        Verdict::Valid => Ok(Output::ok("valid\n".to_string())),
        Verdict::Invalid(reason) => Ok(Output {
            stdout: format!("invalid: {reason}\n"),
            code: EXIT_CHECK_FAILED,
        }),
    }
}

fn classes_names(s: &Semigroup, c: &Congruence) -> Vec<Vec<String>> {
    c.classes().iter().map(|cl| names(s, cl)).collect()
}

fn sigma_for(s: &Semigroup, bound: usize, exact: bool) -> CliResult<SigmaReport> {
    let m = adjoin_identity(s);
    if exact {
        exact_group(s)?;
    }
    Ok(sigma_report(&m, bound, exact)?)
}

fn sigma(c: &Common, bound: usize, exact: bool) -> CliResult<Output> {
    let l = load(c)?;
    let s = &l.s;
    let m = adjoin_identity(s);
    let r = sigma_for(s, bound, exact)?;
    let classes = r.induced_congruence.classes();
    Ok(Output::ok(match c.format {
        Format::Text => {
            let mut out = format!("subject: {}\n", l.subject);
            match r.exactness {
                Exactness::ExactGroup => out.push_str("mode: exact (commutator cosets)\n"),
                Exactness::LowerBound => {
                    writeln!(out, "bound: {bound} (classes generated by pairs with a witness of size <= {bound})").unwrap()
                }
            }
            writeln!(out, "classes: {}", classes.len()).unwrap();
            for (i, cl) in classes.iter().enumerate() {
                writeln!(out, "class {i}: {}", brace(s, cl)).unwrap();
            }
            writeln!(out, "pairs: {}", r.found_pairs.len()).unwrap();
            for p in &r.found_pairs {
                writeln!(out, "({}, {}): {}", s.name(p.u), s.name(p.v), p.witness.render(s)).unwrap();
            }
            out
        }
        Format::Json => {
            let pairs = r
                .found_pairs
                .iter()
                .map(|p| WitnessRecord::two_var(&m, p.u, p.v, &p.witness))
                .collect::<Result<Vec<_>, _>>()?;
            json_out(json!({
                "subject": l.subject,
                "bound": if exact { Value::Null } else { json!(bound) },
                "exactness": r.exactness,
                "classes": classes_names(s, &r.induced_congruence),
                "pairs": pairs,
            }))
        }
    }))
}

fn quotient_cmd(c: &Common, by: QuotientBy, bound: usize, exact: bool) -> CliResult<Output> {
    let l = load(c)?;
    let s = &l.s;
    if exact && by != QuotientBy::Sigma {
        return Err(usage("--exact applies only to --by sigma"));
    }
    let (cong, label) = match by {
        QuotientBy::Sigma => {
            let r = sigma_for(s, bound, exact)?;
            let label = if exact {
                "sigma (exact)".to_string()
            } else {
                format!("sigma (bound {bound})")
            };
            (r.induced_congruence, label)
        }
        QuotientBy::Commutative => (commutative_congruence(s), "commutative".to_string()),
        QuotientBy::Cancellative => (
            commutative_cancellative_congruence(s),
            "commutative-cancellative".to_string(),
        ),
    };
    let q = quotient(s, &cong)?;
    Ok(Output::ok(match c.format {
        Format::Text => format!(
            "# quotient of {} by {label}\n# order: {}, commutative: {}, cancellative: {}\n{}",
            l.subject,
            q.order(),
            q.is_commutative(),
            q.is_cancellative(),
            serialize(&q)
        ),
        Format::Json => json_out(json!({
            "subject": l.subject,
            "by": label,
            "classes": classes_names(s, &cong),
            "order": q.order(),
            "commutative": q.is_commutative(),
            "cancellative": q.is_cancellative(),
            "quotient": table_json(&q),
        })),
    }))
}

fn commutator(c: &Common, pair: Option<&str>) -> CliResult<Output> {
    let l = load(c)?;
    let s = &l.s;
    let g = group_structure(s)?;
    if let Some(pair) = pair {
        let (x, y) = resolve_pair(s, pair)?;
        let z = g.commutator(x, y);
        return Ok(Output::ok(match c.format {
            Format::Text => format!("[{}, {}] = {}\n", s.name(x), s.name(y), s.name(z)),
            Format::Json => json_out(json!({
                "x": s.name(x),
                "y": s.name(y),
                "commutator": s.name(z),
            })),
        }));
    }
    let derived = g.commutator_subgroup();
    let commutators = g.commutators();
    Ok(Output::ok(match c.format {
        Format::Text => format!(
            "subject: {}\ncommutators: {}\ncommutator subgroup: {}\norder: {}\nindex: {}\n",
            l.subject,
            brace(s, &commutators),
            brace(s, &derived),
            derived.len(),
            s.order() / derived.len()
        ),
        Format::Json => json_out(json!({
            "subject": l.subject,
            "commutators": names(s, &commutators),
            "commutator_subgroup": names(s, &derived),
            "order": derived.len(),
            "index": s.order() / derived.len(),
        })),
    }))
}

fn abelianization(c: &Common) -> CliResult<Output> {
    let l = load(c)?;
    let g = group_structure(&l.s)?;
    let ab = g.abelianization();
    let cosets = g.coset_congruence();
    Ok(Output::ok(match c.format {
        Format::Text => format!(
            "# abelianization of {} (order {})\n{}",
            l.subject,
            ab.order(),
            serialize(&ab)
        ),
        Format::Json => json_out(json!({
            "subject": l.subject,
            "order": ab.order(),
            "classes": classes_names(&l.s, &cosets),
            "quotient": table_json(&ab),
        })),
    }))
}

fn verify(c: &Common, suite: Suite, bound: usize) -> CliResult<Output> {
    let l = load(c)?;
    let s = &l.s;
    let group = group_structure(s);
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut notes = Vec::new();
    if matches!(suite, Suite::Theorems | Suite::All) {
        match &group {
            Ok(g) => {
                reports.push(verify_theorem1(g, &l.subject, bound));
                reports.push(verify_theorem2(g, &l.subject, bound)?);
            }
            Err(e) if suite == Suite::Theorems => return Err(e.clone().into()),
            Err(_) => notes.push("theorem suites skipped: not a group".to_string()),
        }
    }
    if matches!(suite, Suite::Propositions | Suite::All) {
        reports.push(verify_propositions(s, &l.subject, bound)?);
    }
    let passed = reports.iter().all(VerificationReport::passed);
    let stdout = match c.format {
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.render_text());
            }
            for n in &notes {
                writeln!(out, "note: {n}").unwrap();
            }
            writeln!(out, "result: {}", if passed { "pass" } else { "fail" }).unwrap();
            out
        }
        Format::Json => json_out(json!({
            "reports": reports,
            "notes": notes,
            "passed": passed,
        })),
    };
    Ok(Output {
        stdout,
        code: if passed { 0 } else { EXIT_CHECK_FAILED },
    })
}
