//! Generate graph families and move them between the JSON and plain-text
//! formats.
//!
//!     cargo run --example graph_files

use lfnet::{gen, io};

fn main() -> lfnet::Result<()> {
    let grid = gen::grid(2, 3, &[0, 5])?;
    println!("grid as JSON:\n{}\n", io::to_json(&grid));
    let text = io::to_text(&grid);
    println!("grid as edge list:\n{text}");
    assert_eq!(io::parse_text(&text)?, grid);

    let random = gen::random_seeded(8, 0.4, 2, 7)?;
    println!("random n=8 p=0.4 seed=7: {}", io::to_json(&random));

    match io::parse_json(r#"{"n": 3, "edges": [[0, 0]], "leaders": [0]}"#) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
