use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use plotters::prelude::*;

use super::{physical_cores, speedups, BenchResult};
use crate::error::{Error, Result};

pub const RESULTS_HEADER: &str = "name,n,s,k,workers,atomics,median_s,reps";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportFiles {
    pub results_csv: PathBuf,
    pub machine_csv: PathBuf,
    pub speedup_plot: Option<PathBuf>,
    pub edges_plot: Option<PathBuf>,
}

/// Writes `results.csv`, `machine.csv` and, when there is anything to draw,
/// `speedup_vs_workers.svg` and `time_vs_edges.svg` into `out_dir`.
pub fn emit_report(results: &[BenchResult], out_dir: impl AsRef<Path>) -> Result<ReportFiles> {
    let dir = out_dir.as_ref();
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;

    let results_csv = dir.join("results.csv");
    let mut text = String::from(RESULTS_HEADER);
    text.push('\n');
    for r in results {
        text.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.name,
            r.n,
            r.s,
            r.k,
            r.workers,
            r.atomics,
            r.median_s,
            r.reps()
        ));
    }
    fs::write(&results_csv, text).map_err(|e| Error::io(&results_csv, e))?;

    let machine_csv = dir.join("machine.csv");
    let mut f = fs::File::create(&machine_csv).map_err(|e| Error::io(&machine_csv, e))?;
    writeln!(
        f,
        "physical_cores,logical_cores\n{},{}",
        physical_cores(),
        num_cpus::get()
    )
    .map_err(|e| Error::io(&machine_csv, e))?;

    let mut files = ReportFiles {
        results_csv,
        machine_csv,
        ..Default::default()
    };
    if results.is_empty() {
        return Ok(files);
    }

    let speedup_path = dir.join("speedup_vs_workers.svg");
    plot_speedup(results, &speedup_path)?;
    files.speedup_plot = Some(speedup_path);

    let edges_path = dir.join("time_vs_edges.svg");
    plot_time_vs_edges(results, &edges_path)?;
    files.edges_plot = Some(edges_path);

    Ok(files)
}

fn plot_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::io(path, std::io::Error::other(e.to_string()))
}

fn plot_speedup(results: &[BenchResult], path: &Path) -> Result<()> {
    // One curve per benchmarked graph.
    let mut groups: BTreeMap<(String, usize, bool), Vec<BenchResult>> = BTreeMap::new();
    for r in results {
        groups
            .entry((r.name.clone(), r.s, r.atomics))
            .or_default()
            .push(r.clone());
    }
    let curves: Vec<(String, Vec<(f64, f64)>)> = groups
        .into_iter()
        .map(|((name, _, atomics), mut rs)| {
            rs.sort_by_key(|r| r.workers);
            let label = if atomics {
                name
            } else {
                format!("{name} (no atomics)")
            };
            let pts = speedups(&rs)
                .into_iter()
                .map(|(w, s)| (w as f64, s))
                .collect();
            (label, pts)
        })
        .collect();

    let max_w = results.iter().map(|r| r.workers).max().unwrap_or(1) as f64;
    let max_s = curves
        .iter()
        .flat_map(|(_, p)| p.iter().map(|&(_, s)| s))
        .fold(max_w, f64::max);

    draw(
        path,
        "speedup vs workers",
        "workers",
        "speedup",
        (0.0, max_w + 1.0),
        (0.0, max_s * 1.1),
        curves,
        true,
    )
}

fn plot_time_vs_edges(results: &[BenchResult], path: &Path) -> Result<()> {
    let mut groups: BTreeMap<(usize, bool), Vec<(f64, f64)>> = BTreeMap::new();
    for r in results {
        groups
            .entry((r.workers, r.atomics))
            .or_default()
            .push((r.s as f64, r.median_s));
    }
    let curves: Vec<(String, Vec<(f64, f64)>)> = groups
        .into_iter()
        .map(|((w, atomics), mut pts)| {
            pts.sort_by(|a, b| a.0.total_cmp(&b.0));
            let suffix = if atomics { "" } else { ", no atomics" };
            (format!("{w} workers{suffix}"), pts)
        })
        .collect();
    let max_x = results.iter().map(|r| r.s).max().unwrap_or(1).max(1) as f64;
    let max_y = results
        .iter()
        .map(|r| r.median_s)
        .fold(0.0, f64::max)
        .max(1e-9);
    draw(
        path,
        "median time vs edges",
        "edges",
        "seconds",
        (0.0, max_x * 1.05),
        (0.0, max_y * 1.1),
        curves,
        false,
    )
}

#[allow(clippy::too_many_arguments)]
fn draw(
    path: &Path,
    title: &str,
    x_desc: &str,
    y_desc: &str,
    x_range: (f64, f64),
    y_range: (f64, f64),
    curves: Vec<(String, Vec<(f64, f64)>)>,
    ideal_diagonal: bool,
) -> Result<()> {
    let root = SVGBackend::new(path, (800, 560)).into_drawing_area();
    root.fill(&WHITE).map_err(|e| plot_err(path, e))?;
    let mut chart = ChartBuilder::on(&root)
        .caption(title, ("sans-serif", 22))
        .margin(16)
        .x_label_area_size(40)
        .y_label_area_size(60)
        .build_cartesian_2d(x_range.0..x_range.1, y_range.0..y_range.1)
        .map_err(|e| plot_err(path, e))?;
    chart
        .configure_mesh()
        .x_desc(x_desc)
        .y_desc(y_desc)
        .draw()
        .map_err(|e| plot_err(path, e))?;

    if ideal_diagonal {
        let top = x_range.1.min(y_range.1);
        chart
            .draw_series(LineSeries::new([(0.0, 0.0), (top, top)], BLACK.mix(0.3)))
            .map_err(|e| plot_err(path, e))?
            .label("ideal")
            .legend(|(x, y)| PathElement::new([(x, y), (x + 16, y)], BLACK.mix(0.3)));
    }

    for (i, (label, pts)) in curves.into_iter().enumerate() {
        let color = Palette99::pick(i).to_rgba();
        chart
            .draw_series(LineSeries::new(pts.iter().copied(), color.stroke_width(2)))
            .map_err(|e| plot_err(path, e))?
            .label(label)
            .legend(move |(x, y)| PathElement::new([(x, y), (x + 16, y)], color.stroke_width(2)));
        chart
            .draw_series(pts.iter().map(|&p| Circle::new(p, 4, color.filled())))
            .map_err(|e| plot_err(path, e))?;
    }

    chart
        .configure_series_labels()
        .background_style(WHITE.mix(0.8))
        .border_style(BLACK)
        .draw()
        .map_err(|e| plot_err(path, e))?;
    root.present().map_err(|e| plot_err(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(s: usize, workers: usize, median_s: f64) -> BenchResult {
        BenchResult {
            name: format!("er-{s}"),
            n: s / 20,
            s,
            k: 50,
            workers,
            atomics: true,
            median_s,
            times_s: vec![median_s; 3],
            setup_s: 0.0,
        }
    }

    #[test]
    fn empty_results_header_only() {
        let dir = tempfile::tempdir().unwrap();
        let files = emit_report(&[], dir.path()).unwrap();
        assert_eq!(
            fs::read_to_string(&files.results_csv).unwrap(),
            format!("{RESULTS_HEADER}\n")
        );
        assert!(files.speedup_plot.is_none() && files.edges_plot.is_none());
        assert!(!dir.path().join("time_vs_edges.svg").exists());
    }

    #[test]
    fn one_row() {
        let dir = tempfile::tempdir().unwrap();
        let files = emit_report(&[result(1000, 2, 0.25)], dir.path()).unwrap();
        let text = fs::read_to_string(&files.results_csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines, [RESULTS_HEADER, "er-1000,50,1000,50,2,true,0.25,3"]);
    }

    #[test]
    fn sweep_plot_is_written() {
        let dir = tempfile::tempdir().unwrap();
        let rs: Vec<_> = [1, 2, 4, 8]
            .iter()
            .map(|&m| result(m * 1_000_000, 1, 0.1 * m as f64))
            .collect();
        let files = emit_report(&rs, dir.path()).unwrap();
        let plot = files.edges_plot.unwrap();
        let svg = fs::read_to_string(plot).unwrap();
        assert!(svg.len() > 200 && svg.contains("<svg"));
        assert!(files.speedup_plot.unwrap().metadata().unwrap().len() > 0);
    }

    #[test]
    fn unwritable_dir() {
        let err = emit_report(&[], "/proc/definitely/not/here").unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }
}
