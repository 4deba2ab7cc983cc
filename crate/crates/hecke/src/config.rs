use std::path::PathBuf;

use hecke_core::exactlin::{FieldError, PrimeField};

pub const FIELD_PRIME_ENV: &str = "HECKE_FIELD_PRIME";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl OutputFormat {
    pub fn name(&self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DataPaths {
    pub sl3: Option<PathBuf>,
    pub gritsenko: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Overrides the default field prime; the companion prime is derived from it.
    pub field_prime: Option<u64>,
    pub output_format: OutputFormat,
    pub data_paths: DataPaths,
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { field_prime: None, output_format: OutputFormat::Json, data_paths: DataPaths::default(), threads: 1 }
    }
}

impl Config {
    pub fn field(&self) -> Result<PrimeField, FieldError> {
        match self.field_prime {
            Some(p) => PrimeField::new(p),
            None => Ok(PrimeField::default_field()),
        }
    }
}
