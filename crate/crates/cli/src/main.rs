use clap::Parser;

fn main() {
    let cli = match dnc_cli::Cli::try_parse() {
        Ok(cli) => cli,
        // clap's own exit code for usage errors would read as "exhausted"
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { dnc_cli::EXIT_INPUT } else { dnc_cli::EXIT_OK });
        }
    };
    let code = dnc_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
