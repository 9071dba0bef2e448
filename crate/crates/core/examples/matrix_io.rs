//! Matrix Market, CSV and JSON round trips; all three are bit-exact.

use formstab::forms::minkowski_form;
use formstab::io::{read_matrix, write_matrix, MatrixFormat};
use formstab::stabilizer::generate;
use formstab::RngStream;

fn main() -> formstab::Result<()> {
    let sample = generate(&minkowski_form(), &mut RngStream::new(5))?;
    for format in [MatrixFormat::Mm, MatrixFormat::Csv, MatrixFormat::Json] {
        let mut buf = Vec::new();
        write_matrix(&mut buf, &sample.a, format)?;
        let text = String::from_utf8(buf).expect("writers emit UTF-8");
        let back = read_matrix(&text, format)?;
        let exact = back
            .as_slice()
            .iter()
            .zip(sample.a.as_slice())
            .all(|(x, y)| x.to_bits() == y.to_bits());
        println!(
            "--- {format:?} ({} bytes), bit-exact round trip: {exact}",
            text.len()
        );
        println!("{}", text.lines().take(4).collect::<Vec<_>>().join("\n"));
    }
    Ok(())
}
