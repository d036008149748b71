#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace permlab {

// Append-only sequence with lock-free reads of the settled prefix.
//
// Storage is a fixed directory of fixed-size chunks, so settled cells never
// move. The single writer fills a cell, then publishes the new size with a
// release store; readers only touch indices below an acquired size.
template <typename T>
class AppendOnlyMemo {
public:
    static constexpr std::size_t kChunkBits = 16;
    static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
    static constexpr std::size_t kMaxChunks = std::size_t{1} << 12;
    static constexpr std::size_t kCapacity = kChunkSize * kMaxChunks;

    class Writer {
    public:
        void push_back(const T& value) { memo_.push_locked(value); }
        const T& operator[](std::size_t i) const { return memo_.cell(i); }
        std::size_t size() const { return memo_.size_.load(std::memory_order_relaxed); }

    private:
        friend class AppendOnlyMemo;
        explicit Writer(AppendOnlyMemo& memo) : memo_(memo) {}
        AppendOnlyMemo& memo_;
    };

    AppendOnlyMemo() : chunks_(std::make_unique<std::unique_ptr<T[]>[]>(kMaxChunks)) {}
    AppendOnlyMemo(const AppendOnlyMemo&) = delete;
    AppendOnlyMemo& operator=(const AppendOnlyMemo&) = delete;

    std::size_t size() const { return size_.load(std::memory_order_acquire); }

    // Caller guarantees i < size().
    const T& operator[](std::size_t i) const { return cell(i); }

    // Runs `extend(writer)` under the writer lock until at least `count` cells
    // are settled. `extend` must append at least one cell per call.
    template <typename Extend>
    void ensure(std::size_t count, Extend&& extend) {
        if (size() >= count) return;
        if (count > kCapacity) throw std::length_error("memo capacity exceeded");
        std::lock_guard lock(writer_mutex_);
        Writer writer(*this);
        while (size_.load(std::memory_order_relaxed) < count) {
            const std::size_t before = size_.load(std::memory_order_relaxed);
            extend(writer);
            if (size_.load(std::memory_order_relaxed) == before) {
                throw std::logic_error("memo extension made no progress");
            }
        }
    }

private:
    const T& cell(std::size_t i) const { return chunks_[i >> kChunkBits][i & (kChunkSize - 1)]; }

    void push_locked(const T& value) {
        const std::size_t n = size_.load(std::memory_order_relaxed);
        if (n >= kCapacity) throw std::length_error("memo capacity exceeded");
        auto& chunk = chunks_[n >> kChunkBits];
        if (!chunk) chunk = std::make_unique<T[]>(kChunkSize);
        chunk[n & (kChunkSize - 1)] = value;
        size_.store(n + 1, std::memory_order_release);
    }

    std::unique_ptr<std::unique_ptr<T[]>[]> chunks_;
    std::atomic<std::size_t> size_{0};
    std::mutex writer_mutex_;
};

}  // namespace permlab
