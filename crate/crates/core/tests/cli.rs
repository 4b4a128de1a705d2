use std::process::Command;

fn instar(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_instar"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn eval_cube_equals_generator() {
    let (c1, a, _) = instar(&["eval", "3", "x x x"]);
    let (c2, b, _) = instar(&["eval", "3", "x"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert_eq!(a, "1,2;3|3;1,2\n");
}

#[test]
fn eval_output_reparses() {
    let (_, out, _) = instar(&["eval", "4", "sigma x y4"]);
    let (code, again, _) = instar(&["mul", "4", out.trim(), "1;1|2;2|3;3|4;4"]);
    assert_eq!(code, 0);
    assert_eq!(again, out);
}

#[test]
fn card_and_mul() {
    assert_eq!(instar(&["card", "3"]).1, "25\n");
    assert_eq!(instar(&["card", "4"]).1, "339\n");
    assert_eq!(
        instar(&["mul", "3", "1;1|2;2|3;3", "1,2;3|3;1,2"]).1,
        "1,2;3|3;1,2\n"
    );
    assert_eq!(instar(&["inv", "3", "1,2;3|3;1,2"]).1, "1,2;3|3;1,2\n");
}

#[test]
fn render_formats() {
    let (code, ascii, _) = instar(&["render", "3", "1,2;3|3;1,2"]);
    assert_eq!(code, 0);
    assert!(ascii.starts_with("top"));
    let (_, dot, _) = instar(&["render", "3", "1,2;3|3;1,2", "--dot"]);
    assert!(dot.starts_with("graph ") && dot.trim_end().ends_with('}'));
}

#[test]
fn errors_go_to_stderr_with_code_two() {
    let (code, out, err) = instar(&["mul", "3", "1;1|2;2", "1;1|2;2|3;3"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"));
    assert_eq!(instar(&["eval", "2", "x"]).0, 2);
    assert_eq!(instar(&["card"]).0, 2);
}

#[test]
fn verify_four_all_passes() {
    let (code, out, err) = instar(&["verify", "4", "all"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("check_presentation n=4 lhs=339 rhs=339 PASS"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn tiny_cap_is_reported() {
    let out = Command::new(env!("CARGO_BIN_EXE_instar"))
        .args(["verify", "4", "presentation"])
        .env("INSTAR_TC_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn enumerate_factorizable() {
    assert_eq!(instar(&["enumerate", "3", "--gens", "f"]).1, "16\n");
    assert_eq!(instar(&["enumerate", "4"]).1, "339\n");
}
