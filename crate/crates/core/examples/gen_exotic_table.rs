//! Regenerates the bundled table for the monoid ⟨a, b | aba = bb⟩.
//!
//! cargo run -p garside --example gen_exotic_table > crates/core/data/exotic-aba-bb.toml

fn main() {
    let table = garside::oracle::generate_exotic_table().expect("presentation is Garside");
    print!("{}", table.to_toml());
}
