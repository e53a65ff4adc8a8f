#include "gaborlat/sequence.hpp"

#include <cmath>
#include <string>

namespace gaborlat {

SparseSequence::SparseSequence(int channels,
                               std::optional<PeriodicSet> support)
    : channels_(channels), support_(std::move(support)) {
    if (channels < 1) {
        throw InputError("SparseSequence: channel count must be >= 1");
    }
}

SparseSequence SparseSequence::delta(int channels, std::int64_t index,
                                     int channel,
                                     std::optional<PeriodicSet> support) {
    SparseSequence f(channels, std::move(support));
    f.set(index, channel, 1.0);
    return f;
}

SparseSequence SparseSequence::indicator(int channels, int channel,
                                         const std::vector<std::int64_t>& indices,
                                         Complex amplitude,
                                         std::optional<PeriodicSet> support) {
    SparseSequence f(channels, std::move(support));
    for (std::int64_t i : indices) f.set(i, channel, amplitude);
    return f;
}

void SparseSequence::validate(std::int64_t index, int channel) const {
    if (channel < 0 || channel >= channels_) {
        throw InputError("SparseSequence: channel " + std::to_string(channel) +
                         " outside {0.." + std::to_string(channels_ - 1) + "}");
    }
    if (support_ && !support_->contains(index)) {
        throw InputError("SparseSequence: index " + std::to_string(index) +
                         " lies outside the declared support set");
    }
}

void SparseSequence::set(std::int64_t index, int channel, Complex value) {
    validate(index, channel);
    if (value == Complex(0.0, 0.0)) {
        entries_.erase({index, channel});
    } else {
        entries_[{index, channel}] = value;
    }
}

void SparseSequence::add(std::int64_t index, int channel, Complex value) {
    set(index, channel, at(index, channel) + value);
}

Complex SparseSequence::at(std::int64_t index, int channel) const {
    auto it = entries_.find({index, channel});
    return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
}

double SparseSequence::squared_norm() const {
    double sum = 0.0;
    for (const auto& [key, value] : entries_) sum += std::norm(value);
    return sum;
}

double SparseSequence::norm() const { return std::sqrt(squared_norm()); }

SparseSequence SparseSequence::scaled(Complex factor) const {
    SparseSequence out(channels_, support_);
    if (factor == Complex(0.0, 0.0)) return out;
    for (const auto& [key, value] : entries_) {
        out.entries_[key] = factor * value;
    }
    return out;
}

std::int64_t SparseSequence::min_index() const {
    if (entries_.empty()) {
        throw std::logic_error("SparseSequence::min_index on empty sequence");
    }
    return entries_.begin()->first.first;
}

std::int64_t SparseSequence::max_index() const {
    if (entries_.empty()) {
        throw std::logic_error("SparseSequence::max_index on empty sequence");
    }
    return entries_.rbegin()->first.first;
}

std::vector<std::int64_t> SparseSequence::channel_support(int channel) const {
    std::vector<std::int64_t> indices;
    for (const auto& [key, value] : entries_) {
        if (key.second == channel) indices.push_back(key.first);
    }
    return indices;
}

SparseSequence SparseSequence::channel(int r) const {
    SparseSequence out(1, support_);
    for (const auto& [key, value] : entries_) {
        if (key.second == r) out.entries_[{key.first, 0}] = value;
    }
    return out;
}

double SparseSequence::max_abs_difference(const SparseSequence& f,
                                          const SparseSequence& g) {
    double worst = 0.0;
    for (const auto& [key, value] : f.entries_) {
        worst = std::max(worst, std::abs(value - g.at(key.first, key.second)));
    }
    for (const auto& [key, value] : g.entries_) {
        worst = std::max(worst, std::abs(value - f.at(key.first, key.second)));
    }
    return worst;
}

}  // namespace gaborlat
