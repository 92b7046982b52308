use clap::ValueEnum;
use morse_pencil::roots::RootOptions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub tolerance: f64,
    pub max_iterations: usize,
    pub output_format: OutputFormat,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        let roots = RootOptions::default();
        RunConfig {
            tolerance: roots.tolerance,
            max_iterations: roots.max_iterations,
            output_format: OutputFormat::Text,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(format!("--tol must be a positive number, got {}", self.tolerance));
        }
        if self.max_iterations == 0 {
            return Err("--max-iter must be positive".into());
        }
        Ok(())
    }

    pub fn root_options(&self) -> RootOptions {
        RootOptions {
            tolerance: self.tolerance,
            max_iterations: self.max_iterations,
        }
    }
}
