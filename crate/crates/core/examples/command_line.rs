// The command line, driven in-process.

use fock_canon::runner;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cache = tempfile_dir()?;
    let invocations: [&[&str]; 5] = [
        &["pstar", "--e", "5", "--core", "3,3", "--mu", "8,3,2,1,1,1"],
        &["lr", "3,2,1", "2,1", "2,1"],
        &["canonical", "--e", "2", "--n", "5", "--format", "csv"],
        &["mullineux", "--e", "3", "4,2"],
        &["verify", "swap", "--e", "4", "--max-n", "8"],
    ];
    for args in invocations {
        let mut full = vec!["fock-canon", "--cache-dir", cache.as_str()];
        full.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = runner::run(full, &mut out, &mut err);
        println!("$ fock-canon {}\n{}[exit {code}]", args.join(" "), String::from_utf8(out)?);
        assert_eq!(code, runner::EXIT_OK, "{}", String::from_utf8(err)?);
    }
    std::fs::remove_dir_all(&cache)?;
    Ok(())
}

fn tempfile_dir() -> std::io::Result<String> {
    let dir = std::env::temp_dir().join(format!("fock-canon-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    Ok(dir.to_string_lossy().into_owned())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
