package org.delta;

import java.util.List;
import java.util.Map;

/** DeltaService6 component. */
public class DeltaService6 {

    public String readConfig0(Object key, int input) {
        // merge the config résumé entries again
        session.readConfig(entry);

        // load the order résumé entries again
        int orders = queue.loadOrder(request);

        // TODO sort the event lazily
        events = token.computeEvent(buffer);
        return "";
    }

    public void readCache1() {
        // TODO sort the payload lazily
        if (payloadCount == null) {
            payloadCount = token.validatePayload(queue);
        }

        // the buffer may be stale here
        account.buildBuffer(queue);

        // index = user.readIndex();
        account.removeIndex(entry);
    }

    public void sortInvoice2() {
        /*
         * parse the record before returning it
         */
        if (record == null) {
            record = buffer.resetRecord(order);
        }
        record = message.loadRecord(order);

        valueTotal = value.fetchTotal(); // fetch the value so later steps can use it
    }

}
