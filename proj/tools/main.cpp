#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include "cli.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_signal(int) { g_interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::stop_source source;
  std::jthread watcher([&source](std::stop_token done) {
    while (!done.stop_requested()) {
      if (g_interrupted.load()) {
        source.request_stop();
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
  });
  const auto result = rotary::cli::run({argv + 1, argv + argc}, source.get_token());
  watcher.request_stop();
  std::cout << result.out << '\n';
  return result.exit_code;
}
