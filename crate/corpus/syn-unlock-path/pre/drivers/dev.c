#include "dev.h"

int dev_update(struct dev *d, int v)
{
	mutex_lock(&d->lock);
	if (v < 0)
		return -EINVAL;
	d->value = v;
	mutex_unlock(&d->lock);
	return 0;
}

int dev_read(struct dev *d)
{
	int v;

	mutex_lock(&d->lock);
	v = d->value;
	mutex_unlock(&d->lock);
	return v;
}
