#ifndef WVG_CLI_HPP
#define WVG_CLI_HPP

namespace wvg {

/// Entry point of the wvg command; returns the process exit code.
int run_cli(int argc, char** argv);

} // namespace wvg

#endif // WVG_CLI_HPP
