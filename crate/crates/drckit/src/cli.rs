//! Command-line front end.
//!
//! Exit codes: 0 on success or a positive verdict, 1 on a negative verdict
//! (an axiom failure, a NO, a MISMATCH), 2 on usage or I/O errors.

use std::fs;

use crate::algebra::{enumerate_strong_algebras, ProjectionAlgebra, AXIOM_IDS};
use crate::category::{classify_cpoc, round_trip_category};
use crate::chain::{build_fundamental, normalize_word, paths_equivalent, Budget, Equivalence};
use crate::docs::{parse, serialize, Document};
use crate::error::Error;
use crate::munn::build_e_of_smp;
use crate::semigroup::{classify_special, enumerate_drc_restriction_semigroups};

const USAGE: &str = "\
drckit: exact computation with projection algebras, DRC-restriction
semigroups, and chain projection ordered categories

usage:
  drckit check <file>
  drckit classify <file>
  drckit build-fundamental <algebra-file>
  drckit build-munn <algebra-file> [--sidecar <path>]
  drckit word-eq <algebra-file> <word1> <word2> [--budget <states>]
  drckit normalize <algebra-file> <word>
  drckit round-trip <file>
  drckit enumerate <algebra|semigroup> <n> [--dedup]

Words are whitespace-separated projection indices. The DRCKIT_BUDGET
environment variable overrides the default search budget of word-eq.
";

pub fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(args: &[String]) -> Result<i32, Error> {
    let Some(cmd) = args.first() else {
        eprint!("{USAGE}");
        return Ok(2);
    };
    match cmd.as_str() {
        "check" => check(require(args, 1)?),
        "classify" => classify(require(args, 1)?),
        "build-fundamental" => build_fundamental_cmd(require(args, 1)?),
        "build-munn" => build_munn_cmd(require(args, 1)?, flag_value(args, "--sidecar")),
        "word-eq" => word_eq(
            require(args, 1)?,
            require(args, 2)?,
            require(args, 3)?,
            flag_value(args, "--budget"),
        ),
        "normalize" => normalize_cmd(require(args, 1)?, require(args, 2)?),
        "round-trip" => round_trip(require(args, 1)?),
        "enumerate" => enumerate_cmd(
            require(args, 1)?,
            require(args, 2)?,
            has_flag(args, "--dedup"),
        ),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            Ok(0)
        }
        other => {
            eprintln!("unknown subcommand {other:?}");
            eprint!("{USAGE}");
            Ok(2)
        }
    }
}

fn require(args: &[String], idx: usize) -> Result<&str, Error> {
    args.get(idx)
        .map(|s| s.as_str())
        .filter(|s| !s.starts_with("--"))
        .ok_or_else(|| Error::Malformed(format!("missing argument {idx}; see drckit help")))
}

fn flag_value<'a>(args: &'a [String], flag: &str) -> Option<&'a str> {
    args.iter()
        .position(|a| a == flag)
        .and_then(|i| args.get(i + 1))
        .map(|s| s.as_str())
}

fn has_flag(args: &[String], flag: &str) -> bool {
    args.iter().any(|a| a == flag)
}

fn load(path: &str) -> Result<Document, Error> {
    parse(&fs::read_to_string(path)?)
}

fn load_algebra(path: &str) -> Result<ProjectionAlgebra, Error> {
    match load(path)? {
        Document::Algebra(a) => Ok(a),
        _ => Err(Error::Malformed(format!(
            "{path} does not hold an algebra document"
        ))),
    }
}

fn parse_word(text: &str) -> Result<Vec<usize>, Error> {
    let letters: Result<Vec<usize>, _> = text
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect();
    match letters {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(Error::Malformed(format!("cannot read {text:?} as a word"))),
    }
}

fn check(path: &str) -> Result<i32, Error> {
    let mut failed = false;
    let mut line = |id: &str, ok: bool, witness: Option<String>| {
        if ok {
            println!("AXIOM {id} PASS");
        } else {
            failed = true;
            match witness {
                Some(w) => println!("AXIOM {id} FAIL {w}"),
                None => println!("AXIOM {id} FAIL"),
            }
        }
    };
    match load(path)? {
        Document::Algebra(alg) => {
            // structural axioms only; SYM/COM are classification flags
            for (idx, id) in AXIOM_IDS.iter().enumerate().take(14) {
                let w = alg.classify_axiom_witness(idx);
                line(
                    id,
                    w.is_none(),
                    w.map(|t| {
                        t.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    }),
                );
            }
        }
        Document::Semigroup(s) => {
            match s.associativity_witness() {
                None => line("ASSOC", true, None),
                Some((a, b, c)) => line("ASSOC", false, Some(format!("{a} {b} {c}"))),
            }
            if s.associativity_witness().is_none() {
                let drc = s.check_drc()?;
                for id in [
                    "i", "ii", "iii", "iv", "v", "i'", "ii'", "iii'", "iv'", "v'",
                ] {
                    let w = s.drc_axiom_witness(id);
                    line(
                        id,
                        w.is_none(),
                        w.map(|t| {
                            t.iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        }),
                    );
                }
                if drc.ok {
                    let ample = s.check_ample()?;
                    match &ample.witness {
                        None => {
                            line("vi", true, None);
                            line("vi'", true, None);
                        }
                        Some((id, w)) => {
                            let txt = w
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" ");
                            if *id == "vi" {
                                line("vi", false, Some(txt));
                                line("vi'", true, None);
                            } else {
                                line("vi", true, None);
                                line("vi'", false, Some(txt));
                            }
                        }
                    }
                }
            }
        }
        Document::Category(c) => {
            for entry in c.check_axioms().entries {
                line(entry.id, entry.ok, entry.witness);
            }
        }
        Document::Word(_) => {
            return Err(Error::Malformed(
                "nothing to check on a word document".into(),
            ))
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn classify(path: &str) -> Result<i32, Error> {
    match load(path)? {
        Document::Algebra(alg) => {
            let c = alg.classify();
            println!("left {}", c.left);
            println!("right {}", c.right);
            println!("two_sided {}", c.two_sided);
            println!("strong {}", c.strong);
            println!("symmetric {}", c.symmetric);
            println!("commutative {}", c.commutative);
            if let Some(v) = c.first_violation {
                let w: Vec<String> = v.witness.iter().map(|x| x.to_string()).collect();
                println!("first_violation {} {}", v.axiom, w.join(" "));
            }
        }
        Document::Semigroup(s) => {
            let drc = s.check_drc()?.ok;
            let restriction = drc && s.check_ample()?.ok;
            println!("drc {drc}");
            println!("drc_restriction {restriction}");
            if restriction {
                let f = classify_special(&s)?;
                println!("restriction {}", f.restriction);
                println!("p_restriction {}", f.p_restriction);
                println!("generalized_regular_circ {}", f.generalized_regular_circ);
                println!("fundamental {}", s.is_fundamental()?);
                println!("projection_generated {}", s.is_projection_generated()?);
            }
        }
        Document::Category(c) => {
            let flags = classify_cpoc(&c)?;
            println!("groupoid {}", flags.groupoid);
            println!("symmetric {}", flags.symmetric);
            println!("commutative {}", flags.commutative);
        }
        Document::Word(_) => {
            return Err(Error::Malformed(
                "nothing to classify on a word document".into(),
            ))
        }
    }
    Ok(0)
}

fn build_fundamental_cmd(path: &str) -> Result<i32, Error> {
    let alg = load_algebra(path)?;
    let model = build_fundamental(&alg)?;
    print!("{}", serialize(&Document::Semigroup(model.semigroup)));
    Ok(0)
}

fn build_munn_cmd(path: &str, sidecar: Option<&str>) -> Result<i32, Error> {
    let alg = load_algebra(path)?;
    let model = build_e_of_smp(&alg)?;
    print!("{}", serialize(&Document::Semigroup(model.semigroup)));
    let mapping: String = model
        .elems
        .iter()
        .enumerate()
        .map(|(i, iso)| {
            let pairs: Vec<String> = iso.pairs.iter().map(|(a, b)| format!("{a}:{b}")).collect();
            format!("ELEM {i} {} {} {}\n", iso.p, iso.q, pairs.join(" "))
        })
        .collect();
    match sidecar {
        Some(path) => fs::write(path, mapping)?,
        None => print!("{mapping}"),
    }
    Ok(0)
}

fn default_budget(a: &crate::paths::PPath, b: &crate::paths::PPath, flag: Option<&str>) -> Budget {
    let mut budget = Budget::default_for(a, b);
    if let Ok(env) = std::env::var("DRCKIT_BUDGET") {
        if let Ok(states) = env.trim().parse::<usize>() {
            budget = budget.with_states(states);
        }
    }
    if let Some(states) = flag.and_then(|v| v.parse::<usize>().ok()) {
        budget = budget.with_states(states);
    }
    budget
}

fn word_eq(path: &str, w1: &str, w2: &str, budget_flag: Option<&str>) -> Result<i32, Error> {
    let alg = load_algebra(path)?;
    let p = normalize_word(&alg, &parse_word(w1)?)?;
    let q = normalize_word(&alg, &parse_word(w2)?)?;
    let budget = default_budget(&p, &q, budget_flag);
    match paths_equivalent(&alg, &p, &q, budget) {
        Equivalence::Yes => {
            println!("YES");
            Ok(0)
        }
        Equivalence::No => {
            println!("NO");
            Ok(1)
        }
        Equivalence::Unknown => {
            println!("UNKNOWN");
            Ok(0)
        }
    }
}

fn normalize_cmd(path: &str, word: &str) -> Result<i32, Error> {
    let alg = load_algebra(path)?;
    let p = normalize_word(&alg, &parse_word(word)?)?;
    let out: Vec<String> = p.seq().iter().map(|v| v.to_string()).collect();
    println!("{}", out.join(" "));
    Ok(0)
}

fn round_trip(path: &str) -> Result<i32, Error> {
    match load(path)? {
        Document::Semigroup(s) => {
            let c = crate::category::from_semigroup(&s)?;
            let back = crate::category::to_semigroup(&c)?;
            if back == s {
                println!("OK");
                Ok(0)
            } else {
                println!("MISMATCH the regenerated semigroup differs");
                Ok(1)
            }
        }
        Document::Category(c) => match round_trip_category(&c)? {
            Ok(()) => {
                println!("OK");
                Ok(0)
            }
            Err(detail) => {
                println!("MISMATCH {detail}");
                Ok(1)
            }
        },
        _ => Err(Error::Malformed(
            "round-trip expects a semigroup or a category".into(),
        )),
    }
}

fn enumerate_cmd(kind: &str, n_text: &str, dedup: bool) -> Result<i32, Error> {
    let n: usize = n_text
        .parse()
        .map_err(|_| Error::Malformed(format!("cannot read {n_text:?} as a size")))?;
    match kind {
        "algebra" => {
            for alg in enumerate_strong_algebras(n, dedup)? {
                print!("{}", serialize(&Document::Algebra(alg)));
            }
        }
        "semigroup" => {
            for s in enumerate_drc_restriction_semigroups(n, dedup)? {
                print!("{}", serialize(&Document::Semigroup(s)));
            }
        }
        other => {
            return Err(Error::Malformed(format!(
                "enumerate expects 'algebra' or 'semigroup', got {other:?}"
            )))
        }
    }
    Ok(0)
}
