/* C interface to the yiqmark watermarking library.
 *
 * Every object is an opaque handle created by a ym_*_create / ym_*_read /
 * ym_embed / ... call and released with the matching ym_*_free. Functions
 * that can fail return a ym_status; on failure the out-parameters are left
 * untouched and ym_last_error() describes the problem for the calling
 * thread. */
#ifndef YIQMARK_H
#define YIQMARK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(YIQMARK_BUILDING)
#    define YM_API __declspec(dllexport)
#  else
#    define YM_API __declspec(dllimport)
#  endif
#else
#  define YM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ym_status {
  YM_OK = 0,
  YM_ERR_NULL_ARGUMENT = 1,
  YM_ERR_MISSING_FILE = 2,
  YM_ERR_UNSUPPORTED_FORMAT = 3,
  YM_ERR_CORRUPT_DATA = 4,
  YM_ERR_IO_FAILURE = 5,
  YM_ERR_ODD_DIMENSION = 6,
  YM_ERR_DIMENSION_MISMATCH = 7,
  YM_ERR_LENGTH_MISMATCH = 8,
  YM_ERR_NON_BINARY_WATERMARK = 9,
  YM_ERR_NON_SQUARE = 10,
  YM_ERR_DEGENERATE_SIZE = 11,
  YM_ERR_INVALID_PARAM = 12,
  YM_ERR_INTERNAL = 13
} ym_status;

typedef enum ym_channel { YM_CHANNEL_Y = 0, YM_CHANNEL_I = 1, YM_CHANNEL_Q = 2 } ym_channel;

typedef enum ym_rgb_channel { YM_RGB_R = 0, YM_RGB_G = 1, YM_RGB_B = 2 } ym_rgb_channel;

typedef enum ym_format { YM_FORMAT_PNG = 0, YM_FORMAT_PPM = 1 } ym_format;

typedef enum ym_attack_kind {
  YM_ATTACK_SCALE = 0,
  YM_ATTACK_ROTATE = 1,
  YM_ATTACK_JPEG = 2,
  YM_ATTACK_GAUSSIAN_NOISE = 3,
  YM_ATTACK_SALT_PEPPER = 4
} ym_attack_kind;

typedef struct ym_image ym_image;   /* 8-bit RGB raster */
typedef struct ym_gray ym_gray;     /* 8-bit single-channel raster */
typedef struct ym_bits ym_bits;     /* square binary matrix */
typedef struct ym_config ym_config; /* embedding/extraction configuration */

typedef struct ym_embed_report {
  double psnr_db; /* +inf when the output equals the cover */
  ym_channel channel;
  double k;
  uint64_t scramble_iterations;
  uint64_t blocks_modified;
} ym_embed_report;

YM_API const char* ym_version(void);
YM_API const char* ym_status_string(ym_status status);
/* Message for the most recent failure on this thread; "" if none. */
YM_API const char* ym_last_error(void);

/* Images. Pixel data is interleaved RGB, row-major, width * height * 3 bytes. */
YM_API ym_status ym_image_create(uint32_t width, uint32_t height, const uint8_t* rgb,
                                 ym_image** out);
YM_API ym_status ym_image_read(const char* path, ym_image** out);
YM_API ym_status ym_image_write(const ym_image* img, const char* path, ym_format format);
YM_API void ym_image_free(ym_image* img);
YM_API uint32_t ym_image_width(const ym_image* img);
YM_API uint32_t ym_image_height(const ym_image* img);
YM_API const uint8_t* ym_image_data(const ym_image* img);

YM_API ym_status ym_gray_create(uint32_t width, uint32_t height, const uint8_t* samples,
                                ym_gray** out);
YM_API ym_status ym_gray_read(const char* path, ym_gray** out);
YM_API ym_status ym_gray_write(const ym_gray* img, const char* path, ym_format format);
YM_API void ym_gray_free(ym_gray* img);
YM_API uint32_t ym_gray_width(const ym_gray* img);
YM_API uint32_t ym_gray_height(const ym_gray* img);
YM_API const uint8_t* ym_gray_data(const ym_gray* img);

/* Bit matrices. Entries are 0 or 1, row-major, side * side bytes. */
YM_API ym_status ym_bits_create(uint32_t side, const uint8_t* bits, ym_bits** out);
YM_API ym_status ym_bits_random(uint32_t side, uint64_t seed, ym_bits** out);
YM_API void ym_bits_free(ym_bits* bits);
YM_API uint32_t ym_bits_side(const ym_bits* bits);
YM_API const uint8_t* ym_bits_data(const ym_bits* bits);
/* bit = 1 iff sample >= threshold; the image must be square. */
YM_API ym_status ym_binarize(const ym_gray* img, uint8_t threshold, ym_bits** out);
/* 0 -> 0, 1 -> 255. */
YM_API ym_status ym_bits_to_gray(const ym_bits* bits, ym_gray** out);

/* Configuration. Defaults: channel Q, k 4, k1 15, pn seed 15, threshold 0,
 * count_a 3, count_b 5, reference 7-position mask, wm_side 64. */
YM_API ym_status ym_config_create(ym_config** out);
YM_API ym_status ym_config_clone(const ym_config* cfg, ym_config** out);
YM_API void ym_config_free(ym_config* cfg);
YM_API ym_status ym_config_set_channel(ym_config* cfg, ym_channel channel);
YM_API ym_status ym_config_set_strength(ym_config* cfg, double k);
YM_API ym_status ym_config_set_keys(ym_config* cfg, uint64_t k1, uint64_t pn_seed,
                                    int64_t threshold, uint64_t count_a, uint64_t count_b);
/* rows[i], cols[i] give the i-th mask position; length >= 4. */
YM_API ym_status ym_config_set_mask(ym_config* cfg, const uint8_t* rows, const uint8_t* cols,
                                    size_t length);
YM_API ym_status ym_config_set_wm_side(ym_config* cfg, uint32_t side);
YM_API ym_channel ym_config_channel(const ym_config* cfg);
YM_API double ym_config_strength(const ym_config* cfg);
YM_API void ym_config_keys(const ym_config* cfg, uint64_t* k1, uint64_t* pn_seed,
                           int64_t* threshold, uint64_t* count_a, uint64_t* count_b);
YM_API uint32_t ym_config_wm_side(const ym_config* cfg);
YM_API size_t ym_config_mask_length(const ym_config* cfg);
YM_API void ym_config_mask_position(const ym_config* cfg, size_t index, uint8_t* row,
                                    uint8_t* col);

/* Codec. report may be NULL. */
YM_API ym_status ym_embed(const ym_image* cover, const ym_bits* watermark, const ym_config* cfg,
                          ym_image** out, ym_embed_report* report);
YM_API ym_status ym_extract(const ym_image* img, const ym_config* cfg, ym_bits** out);
YM_API ym_status ym_scramble_iterations(const ym_config* cfg, uint64_t* out);
YM_API ym_status ym_arnold_period(uint32_t side, uint64_t* out);

/* Metrics. */
YM_API ym_status ym_psnr(const ym_image* a, const ym_image* b, double* out_db);
YM_API ym_status ym_nc(const ym_bits* w, const ym_bits* w2, double* out);
YM_API ym_status ym_ber(const ym_bits* w, const ym_bits* w2, double* out);
YM_API ym_status ym_histogram(const ym_image* img, ym_rgb_channel channel, uint64_t bins[256]);

/* Attacks. seed is used by the noise kinds only. */
YM_API ym_status ym_attack(const ym_image* img, ym_attack_kind kind, double param, uint64_t seed,
                           ym_image** out);

#ifdef __cplusplus
}
#endif

#endif /* YIQMARK_H */
