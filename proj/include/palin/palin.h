/* palin.h - C interface to the palin exact-combinatorics library.
 *
 * Values cross the boundary as text in the library's canonical forms:
 *   partition  comma-separated parts, largest first, e.g. "5,5,3,3,1";
 *              exponent shorthand such as "3,2^4" is accepted on input;
 *              the empty partition is "-"
 *   word       plain 0/1 string, e.g. "01100110"; the empty word is "-"
 *   fraction   "p/q", positive, not necessarily reduced on input
 * Every char* returned through an out parameter is heap-allocated and must
 * be released with palin_free. Out parameters are written only on PALIN_OK
 * (palin_verify also writes its report on PALIN_ERR_VERIFY).
 */
#ifndef PALIN_H
#define PALIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum palin_status {
    PALIN_OK = 0,
    PALIN_END = 1,          /* stream exhausted */
    PALIN_ERR_PARSE = 2,    /* malformed partition/word/fraction text */
    PALIN_ERR_DOMAIN = 3,   /* precondition violated */
    PALIN_ERR_VERIFY = 4,   /* verification found a mismatch */
    PALIN_ERR_NOMEM = 5,
    PALIN_ERR_INTERNAL = 6
} palin_status;

/* Static description of a status code. */
const char* palin_status_str(palin_status status);

void palin_free(char* text);

/* Boundary words. encode rejects the empty partition; decode accepts any
 * word. klein applies one of "E", "R", "I", "RI" to the boundary word of a
 * partition and returns the decoded result. classify returns one of
 * "palindromic", "antipalindromic", "both", "neither". */
palin_status palin_encode(const char* partition, char** word_out);
palin_status palin_decode(const char* word, char** partition_out);
palin_status palin_conjugate(const char* partition, char** partition_out);
palin_status palin_reverse_partition(const char* partition, char** partition_out);
palin_status palin_klein(const char* element, const char* partition, char** partition_out);
palin_status palin_weight(const char* partition, unsigned long long* weight_out);
palin_status palin_hook11(const char* partition, unsigned long long* hook_out);
palin_status palin_classify_word(const char* word, char** class_out);

/* Calkin-Wilf tree navigation. locate returns the path of a fraction along
 * with its 1-based breadth-first index (decimal; it can exceed 64 bits). */
palin_status palin_cw_eval(const char* word, char** fraction_out);
palin_status palin_cw_locate(const char* fraction, char** word_out, char** index_out);
palin_status palin_cw_partition(const char* word, char** partition_out);

/* Palindrome partition counting; n must be positive. pp is returned as a
 * decimal string. witness yields "-" when only (n) and (1^n) exist. */
palin_status palin_pp_count(unsigned long long n, char** count_out);
palin_status palin_pl_count(unsigned long long n, unsigned long long* count_out);
palin_status palin_witness(unsigned long long n, char** partition_out);

/* Generation plan table for n as CSV with header
 * x,y,l,k,zeros,ones,count,example. */
palin_status palin_plan_table_csv(unsigned long long n, char** csv_out);

/* Partition streams. next yields PALIN_END when exhausted. */
typedef struct palin_stream palin_stream;
palin_status palin_stream_partitions(unsigned long long n, palin_stream** stream_out);
palin_status palin_stream_box(unsigned long long rows, unsigned long long cols,
                              palin_stream** stream_out);
palin_status palin_stream_palindromes(unsigned long long n, palin_stream** stream_out);
palin_status palin_stream_next(palin_stream* stream, char** partition_out);
void palin_stream_close(palin_stream* stream);

/* Truncated series with coefficient index = degree. kind is "pp" or "r".
 * Coefficients are decimal strings. */
typedef struct palin_series palin_series;
palin_status palin_series_create(const char* kind, unsigned long long max_degree,
                                 palin_series** series_out);
unsigned long long palin_series_max_degree(const palin_series* series);
palin_status palin_series_coeff(const palin_series* series, unsigned long long degree,
                                char** coeff_out);
void palin_series_close(palin_series* series);

/* ASCII Young diagram with the boundary word annotated. Lines longer than
 * max_width are cut; max_width 0 means unlimited. */
palin_status palin_diagram(const char* partition, unsigned long long max_width,
                           char** text_out);

/* Recomputes every counted quantity two independent ways for 1 <= n <=
 * max_n. Returns PALIN_OK with a summary, or PALIN_ERR_VERIFY with a report
 * naming the first mismatch. */
palin_status palin_verify(unsigned long long max_n, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* PALIN_H */
