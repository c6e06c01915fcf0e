//! Ingest a link file and print all invariants of each link under one brace.
//!
//! ```text
//! cargo run --example batch_links -- data/braces/order8_links_brace.txt data/links/fixtures.txt
//! ```
//!
//! With no arguments the bundled fixtures are run against every bundled brace.

use std::env;
use std::fs;

use skewbrace::algebra::BraceFile;
use skewbrace::diagram::{parse_link_file, NamedLink};
use skewbrace::{compute_invariants, data, SkewBrace};

fn report(brace_name: &str, brace: &SkewBrace, links: &[NamedLink]) {
    println!("# {brace_name}");
    for link in links {
        let inv = compute_invariants(brace, &link.diagram);
        println!(
            "{}: count={} sb={} ideal={}",
            link.name, inv.count, inv.sb, inv.ideal
        );
    }
}

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    if let [brace_path, links_path] = &args[..] {
        let file: BraceFile = fs::read_to_string(brace_path)
            .expect("readable brace file")
            .parse()
            .expect("brace file parses");
        let brace = file.to_brace().expect("tables form a skew brace");
        let text = fs::read_to_string(links_path).expect("readable link file");
        let links = parse_link_file(&text).expect("link file parses");
        report(brace_path, &brace, &links);
        return;
    }

    let links = data::fixture_links();
    for (name, brace) in data::all_braces() {
        report(name, &brace, &links);
    }
}
