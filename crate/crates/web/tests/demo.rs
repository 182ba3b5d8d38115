use christoffel_web::{graph_svg, parallelogram_svg, word_svg};

#[test]
fn graph_drawings() {
    let h = graph_svg("2,5", "", false, 2).unwrap();
    let f = graph_svg("2,5", "", true, 2).unwrap();
    assert!(h.starts_with("<svg") && f.starts_with("<svg"));
    assert_ne!(h, f);
    assert!(graph_svg("15,11,10", "18", true, 2)
        .unwrap()
        .starts_with("<svg"));
    assert!(graph_svg("1,2,3,4", "", false, 2)
        .unwrap_err()
        .contains("d = 2 or 3"));
    assert!(graph_svg("2,4", "", false, 2).is_err());
    assert!(graph_svg("2,5", "", false, 99).is_err());
}

#[test]
fn parallelogram_drawing() {
    let svg = parallelogram_svg("2,3,5").unwrap();
    assert!(svg.contains("<polygon"));
    assert!(parallelogram_svg("2,5").is_err());
}

#[test]
fn word_drawing() {
    let out = word_svg(8, 5).unwrap();
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("aabaababaabab"));
    assert_eq!(lines.next(), Some("abaababaaba"));
    assert!(lines.next().unwrap().starts_with("<svg"));
    assert!(word_svg(4, 6).is_err());
}
