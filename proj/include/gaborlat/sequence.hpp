#pragma once

/**
 * @file sequence.hpp
 * @brief Finitely supported vector-valued sequences over Z.
 *
 * A SparseSequence holds the nonzero samples of a sequence Z -> C^R as a
 * sorted map (index, channel) -> value. Windows and test signals at desk
 * scale have a handful of nonzeros, so an ordered map keeps iteration
 * deterministic and serialization canonical. An optional declared support
 * set constrains where entries may live.
 */

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gaborlat/geometry.hpp"

namespace gaborlat {

class SparseSequence {
  public:
    /// (index, channel) ordered by index first, then channel.
    using Key = std::pair<std::int64_t, int>;
    using EntryMap = std::map<Key, Complex>;

    explicit SparseSequence(int channels,
                            std::optional<PeriodicSet> support = std::nullopt);

    /// A single unit spike at (index, channel).
    static SparseSequence delta(int channels, std::int64_t index, int channel,
                                std::optional<PeriodicSet> support = std::nullopt);

    /// The characteristic function of `indices` on one channel of a
    /// `channels`-valued sequence, scaled by `amplitude`.
    static SparseSequence indicator(int channels, int channel,
                                    const std::vector<std::int64_t>& indices,
                                    Complex amplitude = 1.0,
                                    std::optional<PeriodicSet> support = std::nullopt);

    int channels() const { return channels_; }
    const std::optional<PeriodicSet>& support() const { return support_; }
    const EntryMap& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Sets the sample; exact zeros are erased rather than stored.
    /// Throws InputError when the channel is out of range or the index lies
    /// outside the declared support.
    void set(std::int64_t index, int channel, Complex value);

    /// Adds into the sample (same validation as set).
    void add(std::int64_t index, int channel, Complex value);

    Complex at(std::int64_t index, int channel) const;

    double squared_norm() const;
    double norm() const;

    SparseSequence scaled(Complex factor) const;

    /// Smallest / largest index carrying a nonzero on any channel.
    /// Only valid on nonempty sequences.
    std::int64_t min_index() const;
    std::int64_t max_index() const;

    /// Sorted nonzero indices of one channel.
    std::vector<std::int64_t> channel_support(int channel) const;

    /// One channel as an R=1 sequence (support carried over).
    SparseSequence channel(int r) const;

    /// Largest |f - g| over all populated positions.
    static double max_abs_difference(const SparseSequence& f,
                                     const SparseSequence& g);

  private:
    void validate(std::int64_t index, int channel) const;

    int channels_;
    std::optional<PeriodicSet> support_;
    EntryMap entries_;
};

}  // namespace gaborlat
