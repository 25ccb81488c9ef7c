#ifndef THETA_THREADS_HPP
#define THETA_THREADS_HPP

namespace theta {

// Worker-thread cap for the pair sums. Reads THETA_THREADS; 0 or unset
// means auto. Results are bitwise identical regardless of the value.
unsigned worker_threads();

}  // namespace theta

#endif
