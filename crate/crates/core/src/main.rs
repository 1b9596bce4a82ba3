use std::io;

fn main() {
    linperiod::cli::configure_threads();
    let code = linperiod::cli::run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
