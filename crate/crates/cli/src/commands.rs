//! One function per subcommand. Each returns an [`Answer`] and the JSON
//! record of its normalized inputs; `Err` is an input error.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use artin_core::artin::DEFAULT_LCM_BOUND;
use artin_core::oracle::{Caps, ClassId, DivisorIndex, LcmAnswer, LcmIndex, MonoidBall, Reverser};
use artin_core::ribbons::{
    conjugation_pairs, is_positive_conjugator, normalizer_membership, parabolic_contained, prop_clef, qz_decompose,
    quotient_iso_check, ribbon_decompose,
};
use artin_core::{
    ArtinElement, CoxeterSystem, Error, Garside, GarsideData, GenSet, Monoid, NoCommonMultiple, NormalizerWitness,
    PositiveBraid, RibbonPath, SignedWord, WitnessKind,
};

use crate::{Answer, Cli, Command};

type Outcome = Result<Answer, String>;

/// Default ball radius for `oracle-check`.
pub const ORACLE_DEFAULT_LEN: usize = 4;

/// Step cap for word-reversing lcm certificates.
const REVERSING_STEPS: usize = 1_000_000;

struct Ctx<'a> {
    cli: &'a Cli,
    sys: &'a CoxeterSystem,
    inputs: Map<String, Value>,
}

impl<'a> Ctx<'a> {
    fn record(&mut self, key: &str, value: Value) {
        self.inputs.insert(key.to_string(), value);
    }

    fn positive(&mut self, word: &str) -> Result<PositiveBraid, String> {
        if word.split_whitespace().any(|t| t.ends_with('\'')) {
            return Err(format!("`{word}`: inverse letters are only allowed in group commands"));
        }
        let g = Monoid::new(self.sys).parse(word).map_err(|e| e.to_string())?;
        self.push_word(word);
        Ok(g)
    }

    fn element(&mut self, gs: &Garside<'_>, word: &str) -> Result<ArtinElement, String> {
        let g = gs.parse(word).map_err(|e| e.to_string())?;
        self.push_word(word);
        Ok(g)
    }

    fn push_word(&mut self, word: &str) {
        let words = self.inputs.entry("words").or_insert_with(|| json!([]));
        if let Value::Array(list) = words {
            list.push(json!(word));
        }
    }

    fn subset(&mut self, which: &str) -> Result<Option<GenSet>, String> {
        let raw = if which == "X" { &self.cli.x } else { &self.cli.y };
        let Some(text) = raw else { return Ok(None) };
        let x = self.sys.parse_set(text).map_err(|e| format!("--{which}: {e}"))?;
        self.record(which, json!(self.sys.format_set(x)));
        Ok(Some(x))
    }

    fn required(&mut self, which: &str) -> Result<GenSet, String> {
        self.subset(which)?.ok_or_else(|| format!("`{}` needs --{which}", self.cli.command.name()))
    }

    fn garside(&self) -> Result<Garside<'a>, String> {
        Garside::new(self.sys).map_err(|_| format!("`{}` needs a spherical system", self.cli.command.name()))
    }

    fn word(&self, w: &[usize]) -> String {
        self.sys.format_word(w)
    }

    fn braid(&self, g: &PositiveBraid) -> String {
        self.word(&g.word())
    }

    fn set(&self, x: GenSet) -> String {
        self.sys.format_set(x)
    }
}

pub fn execute(cli: &Cli, sys: &CoxeterSystem) -> Result<(Answer, Value), String> {
    let mut ctx = Ctx { cli, sys, inputs: Map::new() };
    let answer = match &cli.command {
        Command::Nf { word } => nf(&mut ctx, word),
        Command::ReduceW { word } => reduce_w(&mut ctx, word),
        Command::Gcd { a, b, right } => gcd(&mut ctx, a, b, *right),
        Command::Lcm { a, b, right } => lcm(&mut ctx, a, b, *right),
        Command::Delta => delta(&mut ctx),
        Command::Ribbon { word } => ribbon(&mut ctx, word),
        Command::Conj { word } => conj(&mut ctx, word),
        Command::PropClef { word } => clef(&mut ctx, word, WitnessKind::PropClef),
        Command::Contains { word } => clef(&mut ctx, word, WitnessKind::ParabolicContainment),
        Command::Normalizer { word } => clef(&mut ctx, word, WitnessKind::Normalizer),
        Command::Qz { word } => qz(&mut ctx, word),
        Command::QuotientIso => quotient(&mut ctx),
        Command::OracleCheck { samples } => oracle_check(&mut ctx, *samples),
    }?;
    Ok((answer, Value::Object(ctx.inputs)))
}

fn nf(ctx: &mut Ctx<'_>, word: &str) -> Outcome {
    let g = ctx.positive(word)?;
    let m = Monoid::new(ctx.sys);
    let text = m.format(&g);
    let factors: Vec<String> = g.factors().iter().map(|f| ctx.word(f.word())).collect();
    let result = json!({ "normal_form": text, "word": ctx.braid(&g), "length": g.len() });
    Ok(Answer::yes(text, result, json!({ "factors": factors })))
}

fn reduce_w(ctx: &mut Ctx<'_>, word: &str) -> Outcome {
    // s⁻¹ = s in W, so signs are ignored
    let letters: Vec<usize> = SignedWord::parse(ctx.sys, word).map_err(|e| e.to_string())?.0.iter().map(|&(s, _)| s).collect();
    ctx.push_word(word);
    let w = ctx.sys.element(&letters).map_err(|e| e.to_string())?;
    let text = ctx.word(w.word());
    Ok(Answer::yes(text.clone(), json!({ "word": text, "length": w.len() }), Value::Null))
}

fn gcd(ctx: &mut Ctx<'_>, a: &str, b: &str, right: bool) -> Outcome {
    let (ga, gb) = (ctx.positive(a)?, ctx.positive(b)?);
    ctx.record("right", json!(right));
    let m = Monoid::new(ctx.sys);
    let (g, qa, qb) = if right {
        let g = m.gcd_right(&ga, &gb);
        (g.clone(), m.right_quotient(&g, &ga), m.right_quotient(&g, &gb))
    } else {
        let g = m.gcd_left(&ga, &gb);
        (g.clone(), m.left_quotient(&g, &ga), m.left_quotient(&g, &gb))
    };
    let (qa, qb) = qa.zip(qb).ok_or("internal error: the gcd does not divide its operands")?;
    let text = ctx.braid(&g);
    let result = json!({ "gcd": text, "normal_form": m.format(&g), "length": g.len() });
    Ok(Answer::yes(text, result, json!({ "cofactors": [ctx.braid(&qa), ctx.braid(&qb)] })))
}

fn lcm(ctx: &mut Ctx<'_>, a: &str, b: &str, right: bool) -> Outcome {
    let (ga, gb) = (ctx.positive(a)?, ctx.positive(b)?);
    ctx.record("right", json!(right));
    let bound = ctx.cli.max_len.unwrap_or(DEFAULT_LCM_BOUND);
    let m = Monoid::new(ctx.sys).with_lcm_bound(bound);
    let found = if right { m.lcm_right(&ga, &gb) } else { m.lcm_left(&ga, &gb) };
    match found {
        Ok(l) => {
            let (qa, qb) = if right {
                (m.right_quotient(&ga, &l), m.right_quotient(&gb, &l))
            } else {
                (m.left_quotient(&ga, &l), m.left_quotient(&gb, &l))
            };
            let (qa, qb) = qa.zip(qb).ok_or("internal error: operands do not divide the lcm")?;
            let text = ctx.braid(&l);
            let result = json!({ "lcm": text, "normal_form": m.format(&l), "length": l.len() });
            Ok(Answer::yes(text, result, json!({ "cofactors": [ctx.braid(&qa), ctx.braid(&qb)] })))
        }
        Err(NoCommonMultiple::FreePair { s, t }) => {
            let (s, t) = (ctx.sys.name(s), ctx.sys.name(t));
            let result = json!({ "lcm": null, "reason": "free-pair", "pair": [s, t], "conclusive": true });
            Ok(Answer::no(format!("{s} and {t} have no common multiple (m = inf)"), result))
        }
        Err(NoCommonMultiple::BoundExceeded { bound }) => {
            let conclusive = ctx.sys.is_spherical(ctx.sys.all());
            let result = json!({ "lcm": null, "reason": "bound", "bound": bound, "conclusive": conclusive });
            Ok(Answer::no(format!("no common multiple of length at most {bound}"), result))
        }
    }
}

fn delta(ctx: &mut Ctx<'_>) -> Outcome {
    let x = ctx.subset("X")?.unwrap_or(ctx.sys.all());
    let data = match GarsideData::new(ctx.sys, x) {
        Ok(d) => d,
        Err(Error::NotSpherical) => {
            let result = json!({ "delta": null, "subset": ctx.set(x) });
            return Ok(Answer::no(format!("{} is not of spherical type", ctx.set(x)), result));
        }
        Err(e) => return Err(e.to_string()),
    };
    let m = Monoid::new(ctx.sys);
    let sigma: Map<String, Value> =
        x.iter().map(|s| (ctx.sys.name(s).to_string(), json!(ctx.sys.name(data.sigma(s))))).collect();
    let sigma_text: Vec<String> = x.iter().map(|s| format!("{}->{}", ctx.sys.name(s), ctx.sys.name(data.sigma(s)))).collect();
    let word = ctx.braid(data.delta());
    let text = format!("delta: {word}\nsigma: {}\nepsilon: {}", sigma_text.join(" "), data.epsilon());
    let result = json!({
        "subset": ctx.set(x),
        "delta": word,
        "normal_form": m.format(data.delta()),
        "length": data.delta().len(),
        "sigma": sigma,
        "epsilon": data.epsilon(),
    });
    Ok(Answer::yes(text, result, Value::Null))
}

fn path_json(ctx: &Ctx<'_>, p: &RibbonPath) -> Value {
    let steps: Vec<Value> = p
        .steps()
        .iter()
        .map(|s| {
            json!({
                "ribbon": s.format(ctx.sys),
                "source": ctx.set(s.source),
                "letter": ctx.sys.name(s.letter),
                "target": ctx.set(s.target),
                "element": ctx.braid(&s.element),
            })
        })
        .collect();
    json!({
        "path": p.format(ctx.sys),
        "source": ctx.set(p.source()),
        "target": ctx.set(p.target()),
        "product": ctx.braid(p.product()),
        "steps": steps,
    })
}

fn ribbon(ctx: &mut Ctx<'_>, word: &str) -> Outcome {
    let g = ctx.positive(word)?;
    let x = ctx.required("X")?;
    let m = Monoid::new(ctx.sys);
    match ribbon_decompose(&m, &g, x) {
        Ok(p) => {
            let text = format!("path: {}\ntarget: {}", p.format(ctx.sys), ctx.set(p.target()));
            let result = json!({ "path": p.format(ctx.sys), "target": ctx.set(p.target()), "word": ctx.braid(&g) });
            Ok(Answer::yes(text, result, path_json(ctx, &p)))
        }
        Err(Error::NotAConjugator) => Ok(Answer::no(
            format!("{} is not a positive conjugator of {}", ctx.braid(&g), ctx.set(x)),
            json!({ "path": null, "word": ctx.braid(&g) }),
        )),
        Err(e) => Err(e.to_string()),
    }
}

fn conj(ctx: &mut Ctx<'_>, word: &str) -> Outcome {
    let g = ctx.positive(word)?;
    let x = ctx.required("X")?;
    let y = ctx.subset("Y")?;
    let m = Monoid::new(ctx.sys);
    let Some(target) = is_positive_conjugator(&m, &g, x) else {
        return Ok(Answer::no(
            format!("{} is not a positive conjugator of {}", ctx.braid(&g), ctx.set(x)),
            json!({ "target": null, "word": ctx.braid(&g) }),
        ));
    };
    let result = json!({ "target": ctx.set(target), "word": ctx.braid(&g) });
    if let Some(y) = y.filter(|&y| y != target) {
        return Ok(Answer::no(format!("g conjugates {} onto {}, not {}", ctx.set(x), ctx.set(target), ctx.set(y)), result));
    }
    let pairs: Vec<Value> = conjugation_pairs(&m, &g, x)
        .unwrap_or_default()
        .into_iter()
        .map(|(s, t)| json!([ctx.sys.name(s), ctx.sys.name(t)]))
        .collect();
    Ok(Answer::yes(format!("target: {}", ctx.set(target)), result, json!({ "pairs": pairs })))
}

fn witness_json(ctx: &Ctx<'_>, gs: &Garside<'_>, w: &NormalizerWitness) -> Value {
    json!({
        "y": gs.format(&w.y),
        "x": gs.format(&w.x),
        "target": ctx.set(w.target),
        "delta_exponent": w.delta_exponent,
        "path": path_json(ctx, &w.path),
    })
}

/// `prop-clef`, `contains` and `normalizer` share their witness.
fn clef(ctx: &mut Ctx<'_>, word: &str, kind: WitnessKind) -> Outcome {
    let gs = ctx.garside()?;
    let g = ctx.element(&gs, word)?;
    let x = ctx.required("X")?;
    let y = if kind == WitnessKind::Normalizer { x } else { ctx.required("Y")? };
    let found = match kind {
        WitnessKind::PropClef => match prop_clef(&gs, &g, x, y) {
            Ok(w) => Ok(Some(w)),
            Err(Error::NotContained) => Ok(None),
            Err(e) => Err(e),
        },
        WitnessKind::ParabolicContainment => parabolic_contained(&gs, &g, x, y),
        WitnessKind::Normalizer => normalizer_membership(&gs, &g, x),
    }
    .map_err(|e| e.to_string())?;
    let element = gs.format(&g);
    let Some(w) = found else {
        let reason = match kind {
            WitnessKind::PropClef => format!("g·Δ_X²·g⁻¹ is not in A_{}", ctx.set(y)),
            WitnessKind::ParabolicContainment => format!("g·A_X·g⁻¹ is not contained in A_{}", ctx.set(y)),
            WitnessKind::Normalizer => format!("g does not normalize A_{}", ctx.set(x)),
        };
        return Ok(Answer::no(reason, json!({ "holds": false, "element": element })));
    };
    let text = format!(
        "y: {}\nx: {}\ntarget: {}\npath: {}\ndelta exponent: {}",
        gs.format(&w.y),
        gs.format(&w.x),
        ctx.set(w.target),
        w.path.format(ctx.sys),
        w.delta_exponent
    );
    let result = json!({ "holds": true, "element": element, "y": gs.format(&w.y), "x": gs.format(&w.x) });
    Ok(Answer::yes(text, result, witness_json(ctx, &gs, &w)))
}

fn qz(ctx: &mut Ctx<'_>, word: &str) -> Outcome {
    let gs = ctx.garside()?;
    let g = ctx.element(&gs, word)?;
    let x = ctx.required("X")?;
    let element = gs.format(&g);
    let d = match qz_decompose(&gs, &g, x) {
        Ok(d) => d,
        Err(Error::NotInQuasiCentralizer) => {
            return Ok(Answer::no(
                format!("g·X ≠ X·g for X = {}", ctx.set(x)),
                json!({ "holds": false, "element": element }),
            ))
        }
        Err(e) => return Err(e.to_string()),
    };
    let central: Vec<Value> = d.central.iter().map(|&(c, e)| json!({ "component": ctx.set(c), "exponent": e })).collect();
    let central_text: Vec<String> = d.central.iter().map(|&(c, e)| format!("Δ_{}^{}", ctx.set(c), e)).collect();
    let text = format!(
        "central: {}\nh: {}\nparts: {} | {}\npaths: {} | {}",
        if central_text.is_empty() { "1".to_string() } else { central_text.join(" ") },
        gs.format(&d.h),
        ctx.braid(&d.parts.0),
        ctx.braid(&d.parts.1),
        d.paths.0.format(ctx.sys),
        d.paths.1.format(ctx.sys),
    );
    let result = json!({
        "holds": true,
        "element": element,
        "central": central,
        "central_element": gs.format(&d.central_element),
        "h": gs.format(&d.h),
    });
    let witness = json!({
        "parts": [ctx.braid(&d.parts.0), ctx.braid(&d.parts.1)],
        "paths": [path_json(ctx, &d.paths.0), path_json(ctx, &d.paths.1)],
    });
    Ok(Answer::yes(text, result, witness))
}

fn quotient(ctx: &mut Ctx<'_>) -> Outcome {
    let gs = ctx.garside()?;
    let x = ctx.required("X")?;
    let r = quotient_iso_check(&gs, x).map_err(|e| e.to_string())?;
    let reps: Vec<String> = r.reps.iter().map(|w| ctx.word(w.word())).collect();
    let lifts: Vec<String> = r.lifts.iter().map(|g| ctx.braid(g)).collect();
    let paths: Vec<String> = r.paths.iter().map(|p| p.format(ctx.sys)).collect();
    let mut text = format!(
        "|G_X| = {}, |G_X ∩ Z(W_X)| = {}, |Q| = {}, checks = {}",
        r.g_x_order,
        r.centralizer_order,
        r.order(),
        r.checks
    );
    for (i, ((w, l), p)) in reps.iter().zip(&lifts).zip(&paths).enumerate() {
        text.push_str(&format!("\n{i}: {w} | lift {l} | {p}"));
    }
    text.push_str("\ntable:");
    for row in &r.table {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        text.push_str(&format!("\n{}", cells.join(" ")));
    }
    let result = json!({
        "order": r.order(),
        "g_x_order": r.g_x_order,
        "centralizer_order": r.centralizer_order,
        "representatives": reps,
        "table": r.table,
    });
    Ok(Answer::yes(text, result, json!({ "lifts": lifts, "paths": paths, "checks": r.checks })))
}

fn oracle_check(ctx: &mut Ctx<'_>, samples: usize) -> Outcome {
    let small = ctx.cli.max_len.unwrap_or(ORACLE_DEFAULT_LEN);
    let big = 2 * small;
    ctx.record("max_len", json!(small));
    if let Some(seed) = ctx.cli.seed {
        ctx.record("seed", json!(seed));
        ctx.record("samples", json!(samples));
    }
    let caps = Caps { max_radius: big.max(Caps::default().max_radius), ..Caps::default() };
    let ball = MonoidBall::enumerate_with(ctx.sys, big, caps).map_err(|e| e.to_string())?;
    let div = DivisorIndex::build(&ball, small);
    let lcm = LcmIndex::build(&ball, small);
    let m = Monoid::new(ctx.sys).with_lcm_bound(big);
    let reverser = Reverser::new(ctx.sys, REVERSING_STEPS);
    let spherical = ctx.sys.is_spherical(ctx.sys.all());
    let n = ball.classes_up_to(small);
    let reps: Vec<Vec<usize>> = (0..n).map(|c| ball.rep(c)).collect();
    let nf: Vec<PositiveBraid> = reps.iter().map(|w| m.braid(w)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let class_of = |g: &PositiveBraid| ball.class_of(&g.word());

    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let mut check = |ok: bool, what: &dyn Fn() -> String| {
        checks += 1;
        if !ok {
            failures.push(what());
        }
    };

    for c in 0..n {
        for w in ball.members(c) {
            let same = m.braid(&w).map(|g| g == nf[c as usize]).unwrap_or(false);
            check(same, &|| format!("normal form of {}", ctx.word(&w)));
        }
    }
    let lcm_ok = |answer: LcmAnswer, engine: Result<PositiveBraid, NoCommonMultiple>, a: &[usize], b: &[usize], left: bool| {
        match (answer, engine) {
            (LcmAnswer::Found(c), Ok(g)) => ball.class_of(&g.word()) == Some(c),
            (LcmAnswer::NoneWithin(r), Ok(g)) => {
                let verify = if left { Reverser::is_lcm_left } else { Reverser::is_lcm_right };
                g.len() > r && verify(&reverser, a, b, &g.word()) == Ok(true)
            }
            (LcmAnswer::NoneWithin(_), Err(_)) => !spherical,
            _ => false,
        }
    };

    let pairs: Vec<(ClassId, ClassId)> = match ctx.cli.seed {
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
        }
        None => (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect(),
    };
    for &(a, b) in &pairs {
        let (ga, gb) = (&nf[a as usize], &nf[b as usize]);
        let (wa, wb) = (reps[a as usize].as_slice(), reps[b as usize].as_slice());
        let pair = |op: &str| format!("{op}({}, {})", ctx.word(wa), ctx.word(wb));
        check(m.left_divides(ga, gb) == div.divides_left(a, b), &|| pair("left-divides"));
        check(m.right_divides(ga, gb) == div.divides_right(a, b), &|| pair("right-divides"));
        check(class_of(&m.gcd_left(ga, gb)) == div.gcd_left(a, b), &|| pair("gcd"));
        check(class_of(&m.gcd_right(ga, gb)) == div.gcd_right(a, b), &|| pair("gcd-right"));
        check(lcm_ok(lcm.lcm_left(a, b), m.lcm_left(ga, gb), wa, wb, true), &|| pair("lcm"));
        check(lcm_ok(lcm.lcm_right(a, b), m.lcm_right(ga, gb), wa, wb, false), &|| pair("lcm-right"));
    }

    let result = json!({
        "elements": n,
        "pairs": pairs.len(),
        "checks": checks,
        "mismatches": failures.len(),
    });
    let witness = json!({ "failures": failures.iter().take(20).collect::<Vec<_>>() });
    if failures.is_empty() {
        let text = format!("ok: {n} elements of length <= {small}, {} pairs, {checks} checks", pairs.len());
        Ok(Answer::yes(text, result, witness))
    } else {
        let mut answer = Answer::no(format!("{} of {checks} checks disagree", failures.len()), result);
        for f in failures.iter().take(20) {
            answer.text.push_str(&format!("\n  {f}"));
        }
        answer.witness = witness;
        Ok(answer)
    }
}
