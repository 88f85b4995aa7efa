//! Drives the command-line interface in-process and reads back the manifest.

use kcomb::cli::run_with;

fn main() {
    let dir = std::env::temp_dir().join("kcomb-cli-example");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(
        ["kcomb", "invariants", "--family", "e7"],
        &mut out,
        &mut err,
    );
    println!("invariants exit {code}\n{}", String::from_utf8_lossy(&out));

    out.clear();
    let code = run_with(
        ["kcomb", "tongues", "--modes", "32", "--steps", "4000", "--record-every", "400",
         "--detunings", "0,1", "--moduli", "0,0.5", "--output-dir", dir.to_str().unwrap()],
        &mut out,
        &mut err,
    );
    println!("tongues exit {code}");
    println!("{}", std::fs::read_to_string(dir.join("stability_map.csv")).unwrap());
    let manifest: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.join("manifest.json")).unwrap()).unwrap();
    println!("inputs_sha256 {}", manifest["inputs_sha256"]);
}
