use std::process::{Command, Output};

fn braidforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidforge"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn code_of(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn invariant_prints_the_cycle_polynomial() {
    let out = braidforge(&[
        "invariant",
        "--catalog",
        "biquandle3",
        "--strands",
        "2",
        "--word",
        "1 1",
        "--power",
        "6",
    ]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    assert_eq!(
        stdout_of(&out),
        "quiver polynomial: 6u^3 + 3u\nclosure colorings for power 6: 9\n"
    );
}

#[test]
fn weighted_invariant_prints_all_three_polynomials() {
    let out = braidforge(&[
        "invariant",
        "--catalog",
        "ca13",
        "--strands",
        "2",
        "--word",
        "1 1 1",
        "--cocycle",
        "phi5",
    ]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    assert_eq!(
        stdout_of(&out),
        "quiver polynomial: 6u^2 + 3u\n\
         vertex polynomial: u^2v^4 + u^2v^2 + 3u^2v + u^2 + 3u\n\
         edge polynomial: s^4t + s^2 + st^4 + 2st + t^2 + 3\n"
    );
}

#[test]
fn empty_word_acts_as_the_identity() {
    let out = braidforge(&[
        "invariant",
        "--catalog",
        "trivial2",
        "--strands",
        "3",
        "--word",
        "",
    ]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    assert_eq!(stdout_of(&out), "quiver polynomial: 8u\n");
}

#[test]
fn shown_algebras_validate_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["biquandle3", "linear5", "nonmedial4"] {
        let shown = braidforge(&["catalog", "show", name]);
        assert_eq!(code_of(&shown), 0);
        let path = dir.path().join(format!("{name}.txt"));
        std::fs::write(&path, stdout_of(&shown)).unwrap();

        let validated = braidforge(&["validate", "--algebra", path.to_str().unwrap()]);
        assert_eq!(code_of(&validated), 0, "{}", stderr_of(&validated));
        let report = stdout_of(&validated);
        assert!(report.starts_with("ok: "), "{report}");
    }
}

#[test]
fn validate_flags_axiom_violations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.txt");
    std::fs::write(
        &path,
        "kind birack\nsize 2\nunder\n1 1\n2 2\nover\n1 2\n1 2\n",
    )
    .unwrap();
    let out = braidforge(&["validate", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stdout_of(&out).starts_with("invalid: "), "{}", stdout_of(&out));
}

#[test]
fn validate_rejects_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("garbage.txt");
    std::fs::write(&path, "kind nonsense\n").unwrap();
    let out = braidforge(&["validate", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("error:"), "{}", stderr_of(&out));
}

#[test]
fn quiver_exports_dot_to_stdout_and_files() {
    let expected = "digraph quiver {\n  v0 [label=\"(1,1)\"];\n  v0 -> v0;\n}\n";
    let out = braidforge(&[
        "quiver",
        "--catalog",
        "trivial1",
        "--strands",
        "2",
        "--word",
        "1",
    ]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    assert_eq!(stdout_of(&out), expected);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.dot");
    let filed = braidforge(&[
        "quiver",
        "--catalog",
        "trivial1",
        "--strands",
        "2",
        "--word",
        "1",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&filed), 0);
    assert_eq!(stdout_of(&filed), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), expected);
}

#[test]
fn weighted_quiver_dot_carries_weights() {
    let out = braidforge(&[
        "quiver",
        "--catalog",
        "ca13",
        "--strands",
        "2",
        "--word",
        "1 1 1",
        "--cocycle",
        "phi5",
    ]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("bw=4"), "{text}");
    assert!(text.lines().count() > 9);
}

#[test]
fn cocycle_check_accepts_the_bundled_cochain_and_rejects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let shown = braidforge(&["catalog", "show", "ca13", "--cocycle", "phi5"]);
    assert_eq!(code_of(&shown), 0);
    let text = stdout_of(&shown);
    assert_eq!(text, "modulus 5\n0 1 4\n3 0 2\n1 2 0\n");

    let good = dir.path().join("phi.txt");
    std::fs::write(&good, &text).unwrap();
    let checked = braidforge(&["cocycle", "--catalog", "ca13", "check", good.to_str().unwrap()]);
    assert_eq!(code_of(&checked), 0, "{}", stderr_of(&checked));
    assert_eq!(stdout_of(&checked), "cocycle: ok\n");

    let bad = dir.path().join("tampered.txt");
    std::fs::write(&bad, text.replace("0 1 4", "0 2 4")).unwrap();
    let rejected = braidforge(&["cocycle", "--catalog", "ca13", "check", bad.to_str().unwrap()]);
    assert_eq!(code_of(&rejected), 1);
    assert!(
        stdout_of(&rejected).starts_with("not a cocycle: "),
        "{}",
        stdout_of(&rejected)
    );
}

#[test]
fn basis_reports_dimensions_and_classes() {
    let out = braidforge(&["cocycle", "--catalog", "ca13", "basis", "--modulus", "5"]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    assert_eq!(
        stdout_of(&out),
        "dim Z^2 = 6\ndim B^2 = 1\ndim H^2 = 5\nphi5: a nontrivial class\n"
    );

    let plain = braidforge(&["cocycle", "--catalog", "biquandle3", "basis", "--modulus", "3"]);
    assert_eq!(code_of(&plain), 0);
    assert_eq!(stdout_of(&plain), "dim Z^2 = 3\ndim B^2 = 2\ndim H^2 = 1\n");
}

#[test]
fn distinguish_tells_inverse_powers_apart_only_with_weights() {
    let plain = braidforge(&[
        "distinguish",
        "--catalog",
        "ca13",
        "--strands",
        "2",
        "--word-a",
        "1 1 1",
        "--word-b",
        "-1 -1 -1",
    ]);
    assert_eq!(code_of(&plain), 0, "{}", stderr_of(&plain));
    assert_eq!(stdout_of(&plain), "indistinguishable by these invariants\n");

    let weighted = braidforge(&[
        "distinguish",
        "--catalog",
        "ca13",
        "--strands",
        "2",
        "--word-a",
        "1 1 1",
        "--word-b",
        "-1 -1 -1",
        "--cocycle",
        "phi5",
    ]);
    assert_eq!(code_of(&weighted), 1);
    assert_eq!(
        stdout_of(&weighted),
        "distinguished by vertex polynomial: \
         u^2v^4 + u^2v^2 + 3u^2v + u^2 + 3u vs \
         3u^2v^4 + u^2v^3 + u^2v + u^2 + 3u\n"
    );
}

#[test]
fn thread_settings_never_change_the_answer() {
    let args = [
        "invariant",
        "--catalog",
        "linear5",
        "--strands",
        "3",
        "--word",
        "1 2 -1",
    ];
    let base = braidforge(&args);
    assert_eq!(code_of(&base), 0, "{}", stderr_of(&base));

    let mut threaded_args = args.to_vec();
    threaded_args.extend(["--threads", "2"]);
    let threaded = braidforge(&threaded_args);
    assert_eq!(code_of(&threaded), 0);
    assert_eq!(stdout_of(&threaded), stdout_of(&base));

    let via_env = Command::new(env!("CARGO_BIN_EXE_braidforge"))
        .args(args)
        .env("BRAIDFORGE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(via_env.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&via_env.stdout),
        stdout_of(&base)
    );
}

#[test]
fn usage_problems_exit_with_two() {
    let unknown = braidforge(&[
        "invariant",
        "--catalog",
        "missing",
        "--strands",
        "2",
        "--word",
        "1",
    ]);
    assert_eq!(code_of(&unknown), 2);
    assert!(stderr_of(&unknown).contains("missing"), "{}", stderr_of(&unknown));

    let no_source = braidforge(&["invariant", "--strands", "2", "--word", "1"]);
    assert_eq!(code_of(&no_source), 2);

    let both_sources = braidforge(&[
        "invariant",
        "--catalog",
        "ca13",
        "--algebra",
        "x.txt",
        "--strands",
        "2",
        "--word",
        "1",
    ]);
    assert_eq!(code_of(&both_sources), 2);

    let bad_letter = braidforge(&[
        "invariant",
        "--catalog",
        "ca13",
        "--strands",
        "2",
        "--word",
        "7",
    ]);
    assert_eq!(code_of(&bad_letter), 2);

    let over_budget = braidforge(&[
        "invariant",
        "--catalog",
        "ca13",
        "--strands",
        "4",
        "--word",
        "1",
        "--max-vertices",
        "10",
    ]);
    assert_eq!(code_of(&over_budget), 2);
    assert!(stderr_of(&over_budget).contains("budget"), "{}", stderr_of(&over_budget));

    let switch_cocycle = braidforge(&[
        "cocycle",
        "--catalog",
        "linear5",
        "basis",
        "--modulus",
        "5",
    ]);
    assert_eq!(code_of(&switch_cocycle), 2);
    assert!(
        stderr_of(&switch_cocycle).contains("birack"),
        "{}",
        stderr_of(&switch_cocycle)
    );

    let non_prime = braidforge(&["cocycle", "--catalog", "ca13", "basis", "--modulus", "6"]);
    assert_eq!(code_of(&non_prime), 2);
    assert!(stderr_of(&non_prime).contains("prime"), "{}", stderr_of(&non_prime));

    let no_such_cocycle = braidforge(&["catalog", "show", "ca13", "--cocycle", "nope"]);
    assert_eq!(code_of(&no_such_cocycle), 2);
}

#[test]
fn file_algebras_feed_every_command() {
    let dir = tempfile::tempdir().unwrap();
    let shown = braidforge(&["catalog", "show", "ca13"]);
    let path = dir.path().join("ca13.txt");
    std::fs::write(&path, stdout_of(&shown)).unwrap();
    let phi = dir.path().join("phi.txt");
    let shown_phi = braidforge(&["catalog", "show", "ca13", "--cocycle", "phi5"]);
    std::fs::write(&phi, stdout_of(&shown_phi)).unwrap();

    let out = braidforge(&[
        "invariant",
        "--algebra",
        path.to_str().unwrap(),
        "--strands",
        "2",
        "--word",
        "1 1 1",
        "--cocycle",
        phi.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 0, "{}", stderr_of(&out));
    assert!(
        stdout_of(&out).contains("vertex polynomial: u^2v^4 + u^2v^2 + 3u^2v + u^2 + 3u"),
        "{}",
        stdout_of(&out)
    );
}

#[test]
fn catalog_list_names_every_entry() {
    let out = braidforge(&["catalog", "list"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    for name in [
        "trivial1",
        "trivial2",
        "trivial3",
        "trivial4",
        "flip2",
        "biquandle3",
        "ca13",
        "nonmedial4",
        "alex5",
        "linear5",
        "linear7",
    ] {
        assert!(text.contains(name), "missing {name} in {text}");
    }
}
