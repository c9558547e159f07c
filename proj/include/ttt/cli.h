#ifndef TTT_CLI_H_
#define TTT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace ttt {

// Entry point behind the `ttt` binary. `args` excludes the program name.
// Streams are injected so that interactive play and golden outputs can be
// driven from tests.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace ttt

#endif  // TTT_CLI_H_
