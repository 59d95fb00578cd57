#include "palin/palin.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "bitword.hpp"
#include "calkin_wilf.hpp"
#include "oracle.hpp"
#include "palindromes.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "textio.hpp"

using namespace palin;

extern "C" {

struct palin_stream {
    // Exactly one of the sources is active.
    std::optional<PartitionStream> partitions;
    std::optional<BoxStream> box;
    std::optional<PalindromeStream> palindromes;

    std::optional<Partition> next() {
        if (partitions) return partitions->next();
        if (box) return box->next();
        return palindromes->next();
    }
};

struct palin_series {
    CoeffSeries series;
};

}  // extern "C"

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
palin_status wrap(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError&) {
        return PALIN_ERR_PARSE;
    } catch (const std::domain_error&) {
        return PALIN_ERR_DOMAIN;
    } catch (const std::invalid_argument&) {
        return PALIN_ERR_DOMAIN;
    } catch (const std::bad_alloc&) {
        return PALIN_ERR_NOMEM;
    } catch (...) {
        return PALIN_ERR_INTERNAL;
    }
}

palin_status require(const void* p) { return p ? PALIN_OK : PALIN_ERR_DOMAIN; }

}  // namespace

extern "C" {

const char* palin_status_str(palin_status status) {
    switch (status) {
        case PALIN_OK: return "ok";
        case PALIN_END: return "end of stream";
        case PALIN_ERR_PARSE: return "malformed input";
        case PALIN_ERR_DOMAIN: return "argument outside the operation's domain";
        case PALIN_ERR_VERIFY: return "verification mismatch";
        case PALIN_ERR_NOMEM: return "out of memory";
        case PALIN_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void palin_free(char* text) { std::free(text); }

palin_status palin_encode(const char* partition, char** word_out) {
    if (!partition || !word_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *word_out = dup_string(to_text(encode(parse_partition(partition))));
        return PALIN_OK;
    });
}

palin_status palin_decode(const char* word, char** partition_out) {
    if (!word || !partition_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *partition_out = dup_string(to_text(decode(parse_word(word))));
        return PALIN_OK;
    });
}

palin_status palin_conjugate(const char* partition, char** partition_out) {
    if (!partition || !partition_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *partition_out = dup_string(to_text(conjugate(parse_partition(partition))));
        return PALIN_OK;
    });
}

palin_status palin_reverse_partition(const char* partition, char** partition_out) {
    if (!partition || !partition_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *partition_out = dup_string(to_text(reverse_partition(parse_partition(partition))));
        return PALIN_OK;
    });
}

palin_status palin_klein(const char* element, const char* partition, char** partition_out) {
    if (!element || !partition || !partition_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        const Klein g = parse_klein(element);
        *partition_out =
            dup_string(to_text(decode(apply_klein(g, encode(parse_partition(partition))))));
        return PALIN_OK;
    });
}

palin_status palin_weight(const char* partition, unsigned long long* weight_out) {
    if (!partition || !weight_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *weight_out = parse_partition(partition).weight();
        return PALIN_OK;
    });
}

palin_status palin_hook11(const char* partition, unsigned long long* hook_out) {
    if (!partition || !hook_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *hook_out = hook11(parse_partition(partition));
        return PALIN_OK;
    });
}

palin_status palin_classify_word(const char* word, char** class_out) {
    if (!word || !class_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *class_out = dup_string(to_text(classify_path(parse_word(word))));
        return PALIN_OK;
    });
}

palin_status palin_cw_eval(const char* word, char** fraction_out) {
    if (!word || !fraction_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *fraction_out = dup_string(to_text(fraction_at(parse_word(word))));
        return PALIN_OK;
    });
}

palin_status palin_cw_locate(const char* fraction, char** word_out, char** index_out) {
    if (!fraction || !word_out || !index_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        const BitWord path = path_of(parse_fraction(fraction));
        *word_out = dup_string(to_text(path));
        *index_out = dup_string(index_of(path).get_str());
        return PALIN_OK;
    });
}

palin_status palin_cw_partition(const char* word, char** partition_out) {
    if (!word || !partition_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *partition_out = dup_string(to_text(partition_at_node(parse_word(word))));
        return PALIN_OK;
    });
}

palin_status palin_pp_count(unsigned long long n, char** count_out) {
    if (!count_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *count_out = dup_string(pp_count(n).get_str());
        return PALIN_OK;
    });
}

palin_status palin_pl_count(unsigned long long n, unsigned long long* count_out) {
    if (!count_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *count_out = pl_count(n);
        return PALIN_OK;
    });
}

palin_status palin_witness(unsigned long long n, char** partition_out) {
    if (!partition_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        const auto w = nontrivial_witness(n);
        *partition_out = dup_string(w ? to_text(*w) : "-");
        return PALIN_OK;
    });
}

palin_status palin_plan_table_csv(unsigned long long n, char** csv_out) {
    if (!csv_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *csv_out = dup_string(plan_table_csv(n));
        return PALIN_OK;
    });
}

palin_status palin_stream_partitions(unsigned long long n, palin_stream** stream_out) {
    if (auto s = require(stream_out)) return s;
    return wrap([&] {
        auto stream = std::make_unique<palin_stream>();
        stream->partitions.emplace(n);
        *stream_out = stream.release();
        return PALIN_OK;
    });
}

palin_status palin_stream_box(unsigned long long rows, unsigned long long cols,
                              palin_stream** stream_out) {
    if (auto s = require(stream_out)) return s;
    return wrap([&] {
        auto stream = std::make_unique<palin_stream>();
        stream->box.emplace(rows, cols);
        *stream_out = stream.release();
        return PALIN_OK;
    });
}

palin_status palin_stream_palindromes(unsigned long long n, palin_stream** stream_out) {
    if (auto s = require(stream_out)) return s;
    return wrap([&] {
        auto stream = std::make_unique<palin_stream>();
        stream->palindromes.emplace(n);
        *stream_out = stream.release();
        return PALIN_OK;
    });
}

palin_status palin_stream_next(palin_stream* stream, char** partition_out) {
    if (!stream || !partition_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        auto p = stream->next();
        if (!p) return PALIN_END;
        *partition_out = dup_string(to_text(*p));
        return PALIN_OK;
    });
}

void palin_stream_close(palin_stream* stream) { delete stream; }

palin_status palin_series_create(const char* kind, unsigned long long max_degree,
                                 palin_series** series_out) {
    if (!kind || !series_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        CoeffSeries series;
        if (std::strcmp(kind, "pp") == 0)
            series = pp_series(max_degree);
        else if (std::strcmp(kind, "r") == 0)
            series = r_series(max_degree);
        else
            return PALIN_ERR_DOMAIN;
        *series_out = new palin_series{std::move(series)};
        return PALIN_OK;
    });
}

unsigned long long palin_series_max_degree(const palin_series* series) {
    return series ? series->series.max_degree() : 0;
}

palin_status palin_series_coeff(const palin_series* series, unsigned long long degree,
                                char** coeff_out) {
    if (!series || !coeff_out) return PALIN_ERR_DOMAIN;
    if (degree >= series->series.coeffs.size()) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *coeff_out = dup_string(series->series.coeffs[degree].get_str());
        return PALIN_OK;
    });
}

void palin_series_close(palin_series* series) { delete series; }

palin_status palin_diagram(const char* partition, unsigned long long max_width,
                           char** text_out) {
    if (!partition || !text_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        *text_out = dup_string(diagram(parse_partition(partition), max_width));
        return PALIN_OK;
    });
}

palin_status palin_verify(unsigned long long max_n, char** report_out) {
    if (!report_out) return PALIN_ERR_DOMAIN;
    return wrap([&] {
        const auto report = oracle::verify(max_n);
        *report_out = dup_string(report.text);
        return report.ok ? PALIN_OK : PALIN_ERR_VERIFY;
    });
}

}  // extern "C"
