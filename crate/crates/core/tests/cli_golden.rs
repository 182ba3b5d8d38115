//! Golden outputs for every subcommand. Run with `BLESS=1` to regenerate.

use std::path::PathBuf;

use christoffel::cli::run;

const CASES: &[(&str, &str)] = &[
    ("word_8_5", "word -p 8 -q 5"),
    ("word_not_coprime", "word -p 4 -q 6"),
    ("lineword_dir1", "lineword -a 2,5 -x 0,0 -i 1 -n 7"),
    ("lineword_dir2", "lineword -a 2,5 -x 0,0 -i 2 -n 7"),
    ("graph_json_domain", "graph -a 2,5"),
    ("graph_dot_box", "graph -a 1,2 --window -1..1 --format dot"),
    ("graph_width", "graph -a 15,11,10 -w 18"),
    ("graph_bad_width", "graph -a 2,3,5 -w 4"),
    ("flipcheck_standard", "flipcheck -a 2,3,5"),
    ("flipcheck_width", "flipcheck -a 15,11,10 -w 18"),
    ("pirillo_example", "pirillo -K 0,4,1;-2,0,3;1,1,1"),
    ("pirillo_adds_diagonal", "pirillo -K 0,4,1;-2,0,3"),
    ("kernel_235", "kernel -a 2,3,5"),
    ("kernel_d4", "kernel -a 1,2,3,5"),
    ("tile_235", "tile -a 2,3,5 --point 0.6,0.2,0"),
    ("tile_boundary", "tile -a 2,3,5 --point 0.5,0.5,0"),
    ("parallelogram_text", "parallelogram -a 2,3,5"),
    ("parallelogram_json", "parallelogram -a 3,7,8 --format json"),
    ("parallelogram_svg", "parallelogram -a 4,6,7 --format svg"),
    ("render_h_window", "render h-window -a 2,5 --window -2..2"),
    (
        "render_i_window",
        "render i-window -a 2,3,5 --window -1..1 --flip",
    ),
    ("render_g_quotient", "render g-quotient -a 15,11,10 -w 18"),
    (
        "render_parallelogram",
        "render parallelogram -a 2,3,5 --leg-color black",
    ),
    ("render_word_path", "render word-path -p 8 -q 5"),
    ("surface_point", "surface -a 2,3,5 --point 1/2,1/3,1/5"),
    ("surface_integer", "surface -a 2,3,5 --point 1,1,0"),
    ("surface_d4", "surface -a 1,2,3,5 --point 7/3,-1/2,0.25,4"),
    ("surface_bad_point", "surface -a 2,3,5 --point 1,x,0"),
];

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden/cli")
        .join(format!("{name}.txt"))
}

fn capture(args: &str) -> String {
    let argv = std::iter::once("christoffel").chain(args.split(' '));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    format!(
        "$ christoffel {args}\n--- exit {code}\n--- stdout\n{}--- stderr\n{}",
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap()
    )
}

#[test]
fn cli_goldens() {
    let bless = std::env::var_os("BLESS").is_some();
    let mut mismatched = Vec::new();
    for (name, args) in CASES {
        let got = capture(args);
        let path = golden(name);
        if bless {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &got).unwrap();
        }
        if std::fs::read_to_string(&path).ok().as_deref() != Some(got.as_str()) {
            mismatched.push(*name);
        }
    }
    assert!(
        mismatched.is_empty(),
        "outputs differ from goldens: {mismatched:?}"
    );
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("christoffel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("out.svg");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let args = ["christoffel", "render", "word-path", "-p", "3", "-q", "2"];
    assert_eq!(run(args, &mut out, &mut err), 0);
    let mut args_o = args.to_vec();
    let f = file.to_str().unwrap();
    args_o.extend(["-o", f]);
    let (mut out2, mut err2) = (Vec::new(), Vec::new());
    assert_eq!(run(args_o, &mut out2, &mut err2), 0);
    assert_eq!(std::fs::read(&file).unwrap(), out);
    std::fs::remove_dir_all(&dir).unwrap();
}
