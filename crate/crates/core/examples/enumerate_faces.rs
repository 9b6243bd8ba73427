//! Efficient vertices and faces of a matrix file, or of the built-in example.
//!
//! cargo run --example enumerate_faces -- data/all_efficient.json

use molp_simplex::cli::load_matrix;
use molp_simplex::{enumerate_faces, fixtures, Analyzer, EnumerateOptions, Tolerances};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = match std::env::args().nth(1) {
        Some(path) => load_matrix(std::path::Path::new(&path), None).map_err(|e| e.message)?,
        None => fixtures::worked_example(),
    };
    let analyzer = Analyzer::new(&c, Tolerances::default())?;
    let s = enumerate_faces(&analyzer, EnumerateOptions::default())?;
    println!("full:     {}", s.full);
    println!(
        "vertices: {:?}",
        s.vertices.iter().map(|j| j + 1).collect::<Vec<_>>()
    );
    for face in &s.faces {
        println!("face:     {face}");
    }
    for w in &s.warnings {
        println!("warning:  {w}");
    }
    Ok(())
}
