#pragma once

namespace pcf::series {

inline constexpr double kXSer = 6.0;
inline constexpr double kASer = 15.0;
inline constexpr double kMaxLoss = 6.0;

struct SeriesResult {
    double value = 0.0;
    double derivative = 0.0;
    int terms_used = 0;
    // Estimated decimal digits lost to cancellation.
    double cancellation_loss = 0.0;

    bool reliable() const { return cancellation_loss <= kMaxLoss; }
};

struct OriginValues {
    double U0, U0p, V0, V0p;
};

struct EvenOdd {
    double y1, y1p, y2, y2p;
    int terms_used;
    double loss1, loss2;
};

struct UVSeries {
    SeriesResult U;
    SeriesResult V;
};

struct WSeries {
    SeriesResult plus;   // W(a, x), W'(a, x)
    SeriesResult minus;  // W(a, -x), W'(a, -x)
};

// 1/Gamma(x) for real x; exact zero at the poles.
double rgamma(double x);

OriginValues origin_values_uv(double a);
EvenOdd y12(double a, double z);
UVSeries uv_series(double a, double x);
WSeries w_series(double a, double x);

// W(a,0), W'(a,0).
void w_origin(double a, double& w0, double& w0p);

bool in_window(double a, double x);

}  // namespace pcf::series
