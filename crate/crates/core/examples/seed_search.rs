//! Runs the 4-strand seed search for lengths 1 to 5 and prints each report.

use garside::reversing::{search_counterexamples, SearchOptions};

fn main() {
    let jobs = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let options = SearchOptions { jobs, ..Default::default() };
    for length in 1..=5 {
        let report = search_counterexamples(4, length, &options).expect("search runs");
        print!("{}", report.to_json_lines());
        eprintln!("length {length}: {:.2?}", report.elapsed);
    }
}
