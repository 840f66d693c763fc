use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::process::{Command, Stdio};

use wolof_spell::cli::{run, EXIT_FAILURE, EXIT_MALFORMED, EXIT_OK};
use wolof_spell::eval::EvalReport;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], env: &[(&str, &str)], stdin: &str) -> Output {
    let env: HashMap<String, String> = env.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    let lookup = move |key: &str| env.get(key).cloned();
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["wolof-spell"];
    argv.extend_from_slice(args);
    let code = run(argv, &lookup, &mut input, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn check_corrects_stdin() {
    let out = invoke(&["check"], &[], "Deuk bi!\nmousiba\n");
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "dëkk bi\nmusiba\n");
    assert!(out.stderr.contains("deuk: -> dëkk"));
}

#[test]
fn check_empty_input() {
    let out = invoke(&["check"], &[], "");
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, ""));
}

#[test]
fn check_reads_file_and_structured_records() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    fs::write(&input, "tank 12\n").unwrap();
    let out = invoke(&["check", input.to_str().unwrap(), "--format", "structured", "-k", "2"], &[], "");
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    let fields: Vec<&str> = lines[0].split('\t').collect();
    assert_eq!(fields[..5], ["0", "tank", "corrected", "tànk", "lexicon"]);
    assert!(fields[5].starts_with("tànk:1,"));
    assert!(lines[1].starts_with("\t12\tdropped"));
}

#[test]
fn suggest_prints_ranked_candidates() {
    let out = invoke(&["suggest", "guinaw", "-k", "3"], &[], "");
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "ginnaaw\t2");
    let out = invoke(&["suggest", "dëkk", "-k", "1"], &[], "");
    assert_eq!(out.stdout, "dëkk\t0\n");
}

#[test]
fn eval_reports_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.tsv");
    fs::write(&corpus, "dëkk\tvalid\ndeuk\tinvalid\tdëkk\nmousiba\tinvalid\tmusiba\n").unwrap();
    let path = corpus.to_str().unwrap();
    let text = invoke(&["eval", path], &[], "");
    assert_eq!(text.code, EXIT_OK, "{}", text.stderr);
    assert!(text.stdout.contains("PA"));
    let structured = invoke(&["eval", path, "--format", "structured"], &[], "");
    let report = EvalReport::from_structured(&structured.stdout).unwrap();
    assert_eq!((report.counts.tp, report.counts.tn, report.sa_hits), (1, 2, 2));
}

#[test]
fn lexicon_stats() {
    let dir = tempfile::tempdir().unwrap();
    let lexicon = dir.path().join("lex.txt");
    fs::write(&lexicon, "dëkk\nmbokk\n").unwrap();
    let out = invoke(&["lexicon-stats", "--lexicon", lexicon.to_str().unwrap()], &[], "");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("words\t2\n"));
    assert!(out.stdout.contains("geminate\t2\n"), "{}", out.stdout);
    assert!(out.stdout.contains("unsegmentable\t0\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.txt");
    let out = invoke(&["suggest", "x", "--lexicon", missing.to_str().unwrap()], &[], "");
    assert_eq!(out.code, EXIT_FAILURE);
    assert!(!out.stderr.is_empty());

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "dëkk\ntwo words\n").unwrap();
    let out = invoke(&["suggest", "x", "--lexicon", bad.to_str().unwrap()], &[], "");
    assert_eq!(out.code, EXIT_MALFORMED);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);

    let corpus = dir.path().join("corpus.tsv");
    fs::write(&corpus, "deuk\tmaybe\n").unwrap();
    assert_eq!(invoke(&["eval", corpus.to_str().unwrap()], &[], "").code, EXIT_MALFORMED);

    let costs = dir.path().join("costs.tsv");
    fs::write(&costs, "a\tb\n").unwrap();
    assert_eq!(invoke(&["suggest", "x", "--costs", costs.to_str().unwrap()], &[], "").code, EXIT_MALFORMED);

    assert_eq!(invoke(&["suggest", "x", "-k", "0"], &[], "").code, EXIT_FAILURE);
    assert_eq!(invoke(&["frobnicate"], &[], "").code, EXIT_FAILURE);
    let help = invoke(&["--help"], &[], "");
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("suggest"));
}

#[test]
fn settings_precedence() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("words.txt"), "tànk\ntaal\ntang\nbi\nba\n").unwrap();
    let config = dir.path().join("wolof.toml");
    fs::write(&config, "lexicon = \"words.txt\"\nk = 2\n").unwrap();
    let cfg = config.to_str().unwrap();
    let count = |out: Output| {
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        out.stdout.lines().count()
    };
    // The relative lexicon path resolves against the config file.
    assert_eq!(count(invoke(&["suggest", "tank", "--config", cfg], &[], "")), 2);
    assert_eq!(count(invoke(&["suggest", "tank"], &[("WOLOF_SPELL_CONFIG", cfg)], "")), 2);
    let env = [("WOLOF_SPELL_CONFIG", cfg), ("WOLOF_SPELL_K", "3")];
    assert_eq!(count(invoke(&["suggest", "tank"], &env, "")), 3);
    assert_eq!(count(invoke(&["suggest", "tank", "-k", "4"], &env, "")), 4);
    let bounded = [("WOLOF_SPELL_CONFIG", cfg), ("WOLOF_SPELL_MAX_COST", "1")];
    assert_eq!(count(invoke(&["suggest", "tank"], &bounded, "")), 1);

    fs::write(&config, "colour = \"blue\"\n").unwrap();
    assert_eq!(invoke(&["suggest", "tank", "--config", cfg], &[], "").code, EXIT_FAILURE);
    assert_eq!(invoke(&["suggest", "tank"], &[("WOLOF_SPELL_K", "many")], "").code, EXIT_FAILURE);
}

#[test]
fn binary_round_trip() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wolof-spell"))
        .args(["check"])
        .env_remove("WOLOF_SPELL_CONFIG")
        .env_remove("WOLOF_SPELL_LEXICON")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all("Guinaw bi\n".as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "ginnaaw bi\n");

    let status = Command::new(env!("CARGO_BIN_EXE_wolof-spell"))
        .args(["suggest", "x", "--lexicon", "/nonexistent/lexicon.txt"])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_FAILURE));
}

#[test]
fn command_examples() {
    let out = invoke(&["suggest", "tank"], &[], "");
    assert_eq!(out.stdout.lines().next(), Some("tànk\t1"));
    assert_eq!(invoke(&["suggest", "tank", "-k", "1"], &[], "").stdout.lines().count(), 1);
    assert_eq!(invoke(&["check"], &[], "deuk bi").stdout, "dëkk bi\n");

    let sample = include_str!("../data/sample_lexicon.txt");
    let expected = sample.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).count();
    let stats = invoke(&["lexicon-stats"], &[], "");
    assert!(stats.stdout.starts_with(&format!("words\t{expected}\n")), "{}", stats.stdout);

    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();
    let out = invoke(&["lexicon-stats", "--lexicon", empty.to_str().unwrap()], &[], "");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("words\t0\n"));
    let corpus = dir.path().join("c.tsv");
    fs::write(&corpus, "dëkk\tvalid\ndeuk\tinvalid\n").unwrap();
    assert_eq!(invoke(&["eval", corpus.to_str().unwrap()], &[], "").code, EXIT_MALFORMED);
}

#[test]
fn output_is_deterministic() {
    let text = "Mousiba bi, deuk bi! Guinaw 2 fan.\nsakhar\n";
    let a = invoke(&["check", "--format", "structured"], &[], text);
    let b = invoke(&["check", "--format", "structured"], &[], text);
    assert_eq!((a.stdout, a.stderr), (b.stdout, b.stderr));
}
