//! Rewrites docs/parameters.md from the parameter tables.

fn main() -> std::io::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/parameters.md");
    std::fs::create_dir_all(std::path::Path::new(path).parent().unwrap())?;
    std::fs::write(path, metaparts::algorithms::parameters_markdown())?;
    println!("wrote {path}");
    Ok(())
}
