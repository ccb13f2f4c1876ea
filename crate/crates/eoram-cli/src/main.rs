fn main() {
    // Die quietly when stdout closes early (`eoram repro list | head`), like
    // any other unix filter, instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(eoram_cli::run());
}
