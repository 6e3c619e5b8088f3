#pragma once

namespace cyclemax {

// Worker count for the parallel kernels; 0 or negative means all cores.
void set_thread_count(int threads);
int thread_count();

}
