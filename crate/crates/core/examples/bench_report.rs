//! Drives the command-line harness in-process and prints a JSON report.

fn main() {
    let code = biased_pred::cli::run([
        "biased-pred",
        "bench",
        "--structure",
        "layered",
        "--universe-bits",
        "20",
        "--n",
        "2048",
        "--dist-kind",
        "zipf",
        "--s",
        "1.2",
        "--queries",
        "20000",
        "--seed",
        "5",
    ]);
    std::process::exit(code);
}
