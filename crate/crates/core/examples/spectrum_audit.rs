//! Audit the bundled length spectra, or a file given on the command line
//! (JSON, or CSV followed by the filled volume).

use std::path::{Path, PathBuf};

use geodesic_bounds::spectrum::{audit, load_spectrum, SpectrumFormat, HYPOTHESES_DISCLAIMER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs: Vec<(PathBuf, SpectrumFormat)> = match args.as_slice() {
        [] => {
            let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
            ["figure_eight_in_s3.json", "m003_in_weeks.json"]
                .iter()
                .map(|f| (dir.join(f), SpectrumFormat::Json))
                .collect()
        }
        [path] => vec![(path.into(), SpectrumFormat::Json)],
        [path, volume] => vec![(
            path.into(),
            SpectrumFormat::Csv {
                name: path.clone(),
                filled_volume: volume.parse()?,
            },
        )],
        _ => return Err("usage: spectrum_audit [file [volume]]".into()),
    };

    for (path, format) in inputs {
        let record = load_spectrum(&std::fs::read(&path)?, format)?;
        let report = audit(&record);
        println!("{} (V = {}):", report.name, report.filled_volume);
        for e in &report.entries {
            println!(
                "  {:>3}  {:>9.6}  <= {:>9.6}  margin {:>8.4}",
                e.n, e.length, e.bound, e.margin
            );
        }
        println!(
            "  {} passed, {} violations",
            report.passed, report.violations
        );
    }
    println!("{HYPOTHESES_DISCLAIMER}");
    Ok(())
}
