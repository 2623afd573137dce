use std::path::Path;

fn book() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../book/src")
}

/// Every chapter in the summary is compiled into the doctest crate, and
/// nothing else is.
#[test]
fn summary_matches_included_chapters() {
    let summary = std::fs::read_to_string(book().join("SUMMARY.md")).unwrap();
    let mut listed: Vec<&str> = summary
        .lines()
        .filter_map(|l| {
            l.split_once("](")
                .map(|(_, rest)| rest.trim_end_matches(')'))
        })
        .collect();
    let lib = include_str!("../src/lib.rs");
    let mut included: Vec<&str> = lib
        .lines()
        .filter_map(|l| l.strip_prefix("#[doc = include_str!(\"../../../book/src/"))
        .map(|l| l.trim_end_matches("\")]"))
        .collect();
    listed.sort();
    included.sort();
    assert_eq!(listed, included);
    for chapter in listed {
        assert!(book().join(chapter).exists(), "{chapter}");
    }
}
