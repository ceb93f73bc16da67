#include <cmfnip/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cmfnip {

namespace {
    thread_local bool inside_worker = false;
}

unsigned worker_count()
{
    if (const char * env = std::getenv("CMFNIP_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1)
                return static_cast<unsigned>(n);
        }
        catch (const std::exception &) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)> & body)
{
    unsigned workers = worker_count();
    if (inside_worker || workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    // Small dynamic blocks balance uneven per-index cost.
    const std::size_t block = std::max<std::size_t>(1, count / (workers * 16));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run = [&] {
        inside_worker = true;
        for (;;) {
            std::size_t begin = next.fetch_add(block);
            if (begin >= count)
                break;
            std::size_t end = std::min(count, begin + block);
            try {
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
                next = count;
            }
        }
        inside_worker = false;
    };

    std::vector<std::thread> threads;
    for (unsigned w = 1; w < workers; ++w)
        threads.emplace_back(run);
    run();
    for (auto & t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}
