use clap::Parser;
use illoc::cli::{run, Cli, OutputFormat};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.output));
            std::process::exit(report.code);
        }
        Err(e) => {
            if cli.output == OutputFormat::Json {
                println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("plain data"));
            }
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
