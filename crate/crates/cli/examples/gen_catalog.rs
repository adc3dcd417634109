//! Regenerate the check catalog: `cargo run -p supercong-cli --example gen_catalog > docs/checks.md`

use supercong_cli::registry::SPECS;

fn main() {
    println!("# Check catalog");
    println!();
    println!(
        "One row per registered check. The *statement* column is the anchor string \
         carried verbatim in every report row (`anchor` field); the doc-sync test \
         asserts this file and the registry agree."
    );
    println!();
    println!("| id | applicability | statement |");
    println!("|----|---------------|-----------|");
    for s in SPECS {
        let id = if s.experimental {
            format!("`{}` (experimental)", s.id)
        } else {
            format!("`{}`", s.id)
        };
        println!("| {} | {} | {} |", id, s.applicability_str(), s.anchor);
    }
}
