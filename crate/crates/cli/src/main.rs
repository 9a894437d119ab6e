//! `spherekit`: coordinates, Great Circle distances, geodesic polygons,
//! parallel transport, Foucault precession and Euler characteristics from
//! the command line.
//!
//! Results go to stdout, diagnostics to stderr. `--format json` prints every
//! number at full precision; text output is rounded for reading.

mod places;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use spherekit::SphereConfig;

use places::CityTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "spherekit",
    version,
    about = "Spherical geometry on the command line"
)]
struct Cli {
    /// Sphere radius in kilometres.
    #[arg(long, global = true, default_value_t = 6378.0)]
    radius: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// City table (`name,lat,lon` CSV) replacing the bundled one.
    #[arg(long, global = true)]
    cities: Option<PathBuf>,

    /// Decimal places for angles in text output.
    #[arg(long, global = true)]
    precision: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartesian coordinates of a place.
    Coords {
        /// City name or coordinate pair such as `41N/74W`.
        place: Option<String>,
        #[arg(
            long,
            allow_hyphen_values = true,
            requires = "lon",
            conflicts_with = "place"
        )]
        lat: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "lat")]
        lon: Option<String>,
    },
    /// Central angle and Great Circle distance between two places.
    Distance {
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
    },
    /// Angles and area of a geodesic triangle, compared with a flat one.
    Triangle {
        #[arg(num_args = 3, required = true)]
        places: Vec<String>,
        /// Keep the given vertex order even if it encloses more than a hemisphere.
        #[arg(long)]
        as_given: bool,
    },
    /// Angles, holonomy and area of a geodesic polygon.
    Polygon {
        #[arg(num_args = 3.., required = true)]
        places: Vec<String>,
        #[arg(long)]
        as_given: bool,
    },
    /// Walk a geodesic polygon with a parallel-transported wheel.
    Transport {
        #[arg(num_args = 3.., required = true)]
        places: Vec<String>,
        #[arg(long)]
        as_given: bool,
    },
    /// Daily Foucault precession and polar cap area at a latitude.
    Foucault {
        #[arg(allow_hyphen_values = true)]
        latitude: String,
    },
    /// Euler characteristic and angle checks for a mesh file or built-in mesh.
    Mesh {
        /// Path to a mesh JSON file, or one of: tetrahedron, cube, octahedron,
        /// icosahedron, soccer-ball, torus-grid, double-torus.
        mesh: String,
        /// Torus grid rows.
        #[arg(long)]
        n: Option<usize>,
        /// Torus grid columns.
        #[arg(long)]
        m: Option<usize>,
        /// Print the mesh as a JSON document instead of checking it.
        #[arg(long)]
        dump: bool,
    },
}

pub struct RunConfig {
    pub sphere: SphereConfig,
    pub format: Format,
    pub precision: Option<usize>,
}

impl RunConfig {
    /// Angle decimals: the user's choice, else the command's default.
    pub fn angle_digits(&self, default: usize) -> usize {
        self.precision.unwrap_or(default)
    }
}

fn run(cli: Cli) -> Result<String> {
    let cfg = RunConfig {
        sphere: SphereConfig::new(cli.radius).context("--radius")?,
        format: cli.format,
        precision: cli.precision,
    };
    let cities = match &cli.cities {
        Some(path) => CityTable::load(path)?,
        None => CityTable::bundled(),
    };
    let resolve_all = |names: &[String]| -> Result<Vec<places::Place>> {
        names.iter().map(|n| cities.resolve(n)).collect()
    };

    match cli.command {
        Command::Coords { place, lat, lon } => {
            let place = match (place, lat, lon) {
                (Some(p), None, None) => cities.resolve(&p)?,
                (None, Some(lat), Some(lon)) => places::Place {
                    label: format!("{lat}/{lon}"),
                    at: places::latlon(&lat, &lon)?,
                },
                _ => bail!("give a place, or both --lat and --lon"),
            };
            report::coords(&cfg, &place)
        }
        Command::Distance { from, to } => {
            report::distance(&cfg, &cities.resolve(&from)?, &cities.resolve(&to)?)
        }
        Command::Triangle { places, as_given } => {
            report::triangle(&cfg, resolve_all(&places)?, as_given)
        }
        Command::Polygon { places, as_given } => {
            report::polygon(&cfg, resolve_all(&places)?, as_given, false)
        }
        Command::Transport { places, as_given } => {
            report::polygon(&cfg, resolve_all(&places)?, as_given, true)
        }
        Command::Foucault { latitude } => report::foucault(&cfg, places::parse_lat(&latitude)?),
        Command::Mesh { mesh, n, m, dump } => report::mesh(&cfg, &mesh, n, m, dump),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            // a closed pipe (`spherekit ... | head`) is not an error
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
