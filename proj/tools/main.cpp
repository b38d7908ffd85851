#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

#include "cli/commands.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_interrupt(int) { g_interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_interrupt);
    std::signal(SIGTERM, on_interrupt);

    // Signal handlers may only touch the atomic; a watcher forwards it to the stop token.
    std::stop_source stop;
    std::jthread watcher([&stop](std::stop_token self) {
        while (!self.stop_requested()) {
            if (g_interrupted.load()) {
                stop.request_stop();
                return;
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
        }
    });

    const std::vector<std::string> args(argv, argv + argc);
    return fpc::cli::run(args, std::cout, std::cerr, stop.get_token());
}
