//! Compiles and runs a small C program against the generated header and
//! the static library, proving the ABI end to end.

use std::path::PathBuf;
use std::process::Command;

const C_SOURCE: &str = r#"
#include "ncc.h"
#include <stdio.h>
#include <string.h>

int main(void) {
    char *text = NULL;
    if (ncc_count_self_inverse(5, &text) != NCC_STATUS_OK) return 1;
    if (strcmp(text, "11") != 0) return 2;
    ncc_string_free(text);

    NccEnumeration *items = NULL;
    if (ncc_enumerate(3, false, -1, &items) != NCC_STATUS_OK) return 3;
    if (ncc_enumeration_len(items) != 8) return 4;
    if (ncc_enumeration_text(items, 0, &text) != NCC_STATUS_OK) return 5;
    if (strcmp(text, "3_1") != 0) return 6;
    ncc_string_free(text);
    ncc_enumeration_free(items);

    int64_t num[2] = {1, 1};
    int64_t den[3] = {1, -3, 1};
    if (ncc_expand(num, 2, den, 3, 5, &text) != NCC_STATUS_OK) return 7;
    if (strcmp(text, "1,4,11,29,76") != 0) return 8;
    ncc_string_free(text);

    bool all_hold = false;
    if (ncc_verify("T6.2b", 20, &all_hold) != NCC_STATUS_OK) return 9;
    if (!all_hold) return 10;

    NccBijectionSummary summary;
    if (ncc_bijection_check(3, &summary) != NCC_STATUS_OK) return 11;
    if (!summary.valid || summary.class_i != 11) return 12;

    printf("ok\n");
    return 0;
}
"#;

fn target_debug_dir() -> PathBuf {
    // Tests link against the freshly built static library in the shared
    // workspace target directory.
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    match std::env::var("CARGO_TARGET_DIR") {
        Ok(dir) => PathBuf::from(dir).join("debug"),
        Err(_) => manifest.join("../../target/debug"),
    }
}

#[test]
fn c_program_links_and_runs() {
    let scratch = target_debug_dir().join("c-link-smoke");
    std::fs::create_dir_all(&scratch).expect("create scratch dir");
    let source = scratch.join("smoke.c");
    let binary = scratch.join("smoke");
    std::fs::write(&source, C_SOURCE).expect("write C source");

    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let static_lib = target_debug_dir().join("libncc_ffi.a");
    assert!(static_lib.exists(), "static library missing: {static_lib:?}");

    let compile = Command::new("cc")
        .arg(&source)
        .arg(&static_lib)
        .arg(format!("-I{}", include_dir.display()))
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc runs");
    assert!(
        compile.status.success(),
        "cc failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("smoke binary runs");
    assert!(
        run.status.success(),
        "smoke binary exited with {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
