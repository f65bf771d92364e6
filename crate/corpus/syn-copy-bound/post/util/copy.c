#include <stddef.h>

int copy_words(int *dst, const int *src, int n)
{
	int i;
	for (i = 0; i < n; i++)
		dst[i] = src[i];
	return i;
}

int sum_words(const int *src, int n)
{
	int i, s = 0;
	for (i = 0; i < n; i++)
		s += src[i];
	return s;
}
