#![no_main]

use grover_phase::cli::run_with_io;
use libfuzzer_sys::fuzz_target;

// Whitespace-split argv. Every number is capped at 12 so a valid command line
// cannot spend the run simulating a large register; `--out` is dropped so
// nothing touches the filesystem.
fuzz_target!(|data: &str| {
    let args: Vec<&str> = data.split_whitespace().take(16).collect();
    if args.iter().any(|a| a.starts_with("--out")) {
        return;
    }
    let too_big = args
        .iter()
        .flat_map(|a| a.split(|c: char| !c.is_ascii_digit()))
        .any(|d| !d.is_empty() && d.parse::<u32>().map_or(true, |v| v > 12));
    if too_big {
        return;
    }
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with_io(
        std::iter::once("grover-phase").chain(args),
        &mut out,
        &mut err,
    );
    assert!((0..=3).contains(&code), "exit code {code}");
});
