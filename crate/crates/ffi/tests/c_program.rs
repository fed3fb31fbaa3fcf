//! Compile a small C program against the generated header and the static
//! library, and check its output.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "chromroots.h"

static int check(CrStatus s) {
    if (s != CR_STATUS_OK) {
        const char *m = cr_last_error();
        fprintf(stderr, "status %d: %s\n", (int)s, m ? m : "?");
        return 1;
    }
    return 0;
}

int main(void) {
    CrPoly *h = NULL, *std = NULL;
    char *text = NULL, *shift = NULL, *json = NULL;
    if (check(cr_family_polynomial("ring:1,1,1,5", 0, &h))) return 1;
    if (check(cr_poly_format(h, 'q', &text))) return 1;
    printf("%s\n", text);
    cr_string_free(text);
    if (check(cr_poly_standardize(h, &std, &shift))) return 1;
    if (check(cr_poly_format(std, 'x', &text))) return 1;
    printf("%s shift=%s\n", text, shift);
    cr_string_free(text);
    cr_string_free(shift);
    if (check(cr_poly_galois_json(h, 0, &json))) return 1;
    printf("%s\n", strstr(json, "\"name\":\"C2\"") ? "C2" : json);
    cr_string_free(json);

    CrGraph *g = NULL;
    CrPoly *p = NULL;
    if (check(cr_graph_parse("4\n0 1\n1 2\n2 3\n3 0\n", &g))) return 1;
    if (check(cr_graph_chromatic(g, &p))) return 1;
    if (check(cr_poly_format(p, 'q', &text))) return 1;
    printf("%s\n", text);
    cr_string_free(text);
    cr_graph_free(g);
    cr_poly_free(p);
    cr_poly_free(std);
    cr_poly_free(h);

    CrPoly *bad = NULL;
    CrStatus s = cr_poly_parse("x^^2", &bad);
    printf("%d %s\n", (int)s, bad == NULL && cr_last_error() != NULL ? "null" : "set");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libchromroots_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let work = tempfile::tempdir().unwrap();
    let src = work.path().join("main.c");
    let bin = work.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler named cc");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "q^2 - 7q + 11\nx^2 + x - 1 shift=4\nC2\nq^4 - 4q^3 + 6q^2 - 3q\n3 null\n"
    );
}
