#pragma once

// Minimal process runner for exercising the CLI binary from tests.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace gaborlat::testing {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

class CliRunner {
  public:
    /// cli: path to the binary (made absolute); work_dir must exist.
    CliRunner(std::string cli, std::string work_dir)
        : cli_(std::move(cli)), dir_(std::move(work_dir)) {
        if (char* absolute = realpath(cli_.c_str(), nullptr)) {
            cli_ = absolute;
            free(absolute);
        }
    }

    const std::string& dir() const { return dir_; }

    std::string write_file(const std::string& name,
                           const std::string& text) const {
        const std::string path = dir_ + "/" + name;
        std::ofstream out(path);
        out << text;
        return path;
    }

    CliResult run(const std::string& args) const {
        const std::string out_path = dir_ + "/cli_stdout.txt";
        const std::string command = "cd " + dir_ + " && " + cli_ + " " +
                                    args + " > " + out_path + " 2> " + dir_ +
                                    "/cli_stderr.txt";
        const int status = std::system(command.c_str());
        CliResult result;
        result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        std::ifstream in(out_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        result.out = ss.str();
        return result;
    }

  private:
    std::string cli_;
    std::string dir_;
};

}  // namespace gaborlat::testing
