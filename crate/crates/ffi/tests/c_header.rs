//! Compiles `examples/demo.c` against the generated header and the shared
//! library, then runs it. Skipped when no C compiler is available.

use std::path::{Path, PathBuf};
use std::process::Command;

fn target_dir() -> PathBuf {
    // tests/<exe> lives in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn demo_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib_dir = target_dir();
    if !lib_dir.join("liblemniscate_ffi.so").exists() && !lib_dir.join("liblemniscate_ffi.dylib").exists() {
        eprintln!("shared library not built in {}, skipping", lib_dir.display());
        return;
    }
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("demo");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(root.join("include"))
        .arg(root.join("examples/demo.c"))
        .arg("-L")
        .arg(&lib_dir)
        .arg("-llemniscate_ffi")
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "demo.c failed to compile");
    let run = Command::new(&exe).env("LD_LIBRARY_PATH", &lib_dir).env("DYLD_LIBRARY_PATH", &lib_dir).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(run.status.success(), "{stdout}\n{}", String::from_utf8_lossy(&run.stderr));
    assert!(stdout.contains("omega = 2.62205755429211981046483958989"));
    assert!(stdout.contains("V16 = "));
    assert!(stdout.contains("certificate pass"));
    assert!(stdout.contains("9-gon is not constructible"));
}
